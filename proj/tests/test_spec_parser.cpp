#include "doctest.h"

#include "amalgam/spec_parser.hpp"

using namespace amalgam;

namespace {

const char* kBasic = R"(
; small catalog
(def Z2 (zmod 2))
(def Z4 (zmod 4))
(def D2 (polyquot Z2 (poly 0 0 1)))
(def E1 (amalg Z4 Z2 (hom reduction) (ideal Z2 1)))
(def E2 (amalg Z2 D2 (hom inclusion) (ideal D2 x)))
(def P (product Z2 Z2))
(def E8 (amalg Z2 P (hom diagonal) (ideal P [0,1])))
(def DUP42 (dup Z4 (ideal Z4 2)))
(def Q (quot Z4 (ideal Z4 2)))
(def R (hom Z4 Q reduction))
(def FIB (fiber (hom Z4 Z2 reduction) (hom Z2 Z2 identity)))
(def T (truncpoly 2 1 2))
(def I (ideal T x))
(def H (hom Z4 Z2 (images 0 1 0 1)))
(expect E2 published (P3_arithmetical true) (P4_gauss true))
)";

}  // namespace

TEST_CASE("reader positions and canonical text") {
  auto forms = read_sexprs("(def A\n  (zmod   4)) ; trailing\n(def B A)");
  REQUIRE(forms.size() == 2);
  CHECK(forms[0].str() == "(def A (zmod 4))");
  CHECK(forms[0].items[2].line == 2);
  CHECK(forms[0].items[2].column == 3);
  CHECK(forms[1].line == 3);
}

TEST_CASE("reader rejects unbalanced input") {
  try {
    read_sexprs("(def A (zmod 4)");
    FAIL("expected an error");
  } catch (const SpecParseError& e) {
    CHECK(e.error().kind == SpecError::Kind::Syntax);
    CHECK(e.error().line == 1);
  }
  CHECK_THROWS_AS(read_sexprs("(def A (zmod 4)))"), SpecParseError);
  CHECK_THROWS_AS(read_sexprs("stray"), SpecParseError);
}

TEST_CASE("basic catalog builds") {
  auto f = parse_spec(kBasic);
  for (const auto& e : f.errors) MESSAGE(e.str());
  REQUIRE(f.errors.empty());
  CHECK(f.find("Z4")->value.ring.size() == 4);
  CHECK(f.find("E1")->value.kind == SpecValue::Kind::Amalgamation);
  CHECK(f.find("E1")->value.ring.size() == 8);
  CHECK(f.find("E2")->value.ring.size() == 4);
  CHECK(f.find("E8")->value.ring.size() == 4);
  CHECK(f.find("DUP42")->value.ring.size() == 8);
  CHECK(f.find("DUP42")->value.ring.provenance() == "(dup (zmod 4) (ideal (zmod 4) 2))");
  CHECK(f.find("Q")->value.ring.size() == 2);
  CHECK(f.find("R")->value.kind == SpecValue::Kind::Hom);
  CHECK(f.find("FIB")->value.kind == SpecValue::Kind::FiberProduct);
  CHECK(f.find("FIB")->value.ring.size() == 4);
  CHECK(f.find("T")->value.ring.size() == 4);
  CHECK(f.find("I")->value.ideal->members().count() == 2);
  CHECK(f.find("H")->value.hom->map() == std::vector<Elem>{0, 1, 0, 1});
  REQUIRE(f.expectations.size() == 1);
  CHECK(f.expectations[0].entry == "E2");
  CHECK(f.expectations[0].basis == "published");
  CHECK(f.expectations[0].verdicts.size() == 2);
  CHECK(f.find("E2")->expression == "(amalg Z2 D2 (hom inclusion) (ideal D2 x))");
}

TEST_CASE("zmod 0 is a construction error") {
  auto f = parse_spec("(def X (zmod 0))\n(def Y (zmod 3))");
  REQUIRE(f.errors.size() == 1);
  CHECK(f.errors[0].kind == SpecError::Kind::Build);
  CHECK(f.errors[0].line == 1);
  CHECK(f.errors[0].column == 8);
  CHECK_FALSE(f.has_syntax_errors());
  CHECK(f.find("X") == nullptr);
  CHECK(f.find("Y") != nullptr);
}

TEST_CASE("error kinds") {
  auto kind_of = [](const char* text) {
    auto f = parse_spec(text);
    REQUIRE(f.errors.size() == 1);
    return f.errors[0].kind;
  };
  CHECK(kind_of("(def A (zring 4))") == SpecError::Kind::UnknownConstructor);
  CHECK(kind_of("(def A B)") == SpecError::Kind::UnresolvedReference);
  CHECK(kind_of("(def A (product B (zmod 2)))\n(def B (zmod 2))") == SpecError::Kind::UnresolvedReference);
  CHECK(kind_of("(def A (zmod 2))\n(def A (zmod 3))") == SpecError::Kind::Duplicate);
  CHECK(kind_of("(def A (zmod two))") == SpecError::Kind::Syntax);
  CHECK(kind_of("(def A (zmod 2 3))") == SpecError::Kind::Syntax);
  CHECK(kind_of("(def A (zmod 4)) (def H (hom A A (images 0 2 0 2)))") == SpecError::Kind::Build);
  CHECK(kind_of("(def A (zmod 4)) (def I (ideal A 7))") == SpecError::Kind::Build);
  CHECK(kind_of("(def A (zmod 4)) (expect A derived (P9 true))") == SpecError::Kind::Syntax);
  CHECK(kind_of("(expect Nope derived (P4_gauss true))") == SpecError::Kind::UnresolvedReference);
  CHECK(kind_of("(def A (zmod 4)) (def B (zmod 2)) (def C (amalg A B (hom A B (images 0 1 0 1)) (ideal A 2)))") ==
        SpecError::Kind::Build);
}

TEST_CASE("budget errors") {
  Budget b;
  b.ring_size = 16;
  auto f = parse_spec("(def A (zmod 32))", b);
  REQUIRE(f.errors.size() == 1);
  CHECK(f.errors[0].kind == SpecError::Kind::Budget);
}

TEST_CASE("named homomorphisms") {
  auto z2 = mk_zmod(2), z4 = mk_zmod(4), z1 = mk_zmod(1), z6 = mk_zmod(6), z3 = mk_zmod(3);
  CHECK(named_hom("reduction", z4, z2).map() == std::vector<Elem>{0, 1, 0, 1});
  CHECK(named_hom("reduction", z4, z1).map() == std::vector<Elem>{0, 0, 0, 0});
  CHECK(named_hom("reduction", z6, z3).map() == std::vector<Elem>{0, 1, 2, 0, 1, 2});
  CHECK_THROWS_AS(named_hom("reduction", z2, z4), InvalidHom);
  auto p = mk_product(z2, z4);
  CHECK(named_hom("proj1", p.ring, z2).map()[p.pair(1, 3)] == 1);
  CHECK(named_hom("proj2", p.ring, z4).map()[p.pair(1, 3)] == 3);
  CHECK_THROWS_AS(named_hom("proj1", p.ring, z4), InvalidHom);
  auto d = mk_product(z4, z4);
  CHECK(named_hom("diagonal", z4, d.ring).map()[3] == d.pair(3, 3));
  auto q = mk_quotient(z4, ideal_generate(z4, {2}));
  CHECK(named_hom("reduction", z4, q.ring).map() == std::vector<Elem>{0, 1, 0, 1});
  auto t = mk_truncated_poly(2, 1, 2);
  CHECK(named_hom("inclusion", z2, t).map() == std::vector<Elem>{0, 1});
  CHECK_THROWS_AS(named_hom("identity", z2, z4), InvalidHom);
  CHECK_THROWS_AS(named_hom("frobenius", z2, z2), InvalidHom);
}

TEST_CASE("provenance round trip") {
  auto f = parse_spec(kBasic);
  REQUIRE(f.errors.empty());
  for (const auto& d : f.defs) {
    if (d.value.kind == SpecValue::Kind::Ideal || d.value.kind == SpecValue::Kind::Hom) continue;
    const Ring& r = d.value.ring;
    auto again = evaluate_expression(r.provenance(), nullptr);
    CAPTURE(d.name);
    CHECK(again.ring.provenance() == r.provenance());
    CHECK(again.ring.tables().add == r.tables().add);
    CHECK(again.ring.tables().mul == r.tables().mul);
    CHECK(again.ring == r);
  }
}

TEST_CASE("named hom needs context") {
  CHECK_THROWS_AS(evaluate_expression("(hom inclusion)", nullptr), SpecParseError);
  CHECK_THROWS_AS(evaluate_expression("(zmod 2) (zmod 3)", nullptr), SpecParseError);
  auto v = evaluate_expression("(product (zmod 2) (zmod 3))", nullptr);
  CHECK(v.ring.size() == 6);
}
