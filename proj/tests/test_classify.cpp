#include "doctest.h"

#include <chrono>

#include "amalgam/amalgamation.hpp"
#include "amalgam/classify.hpp"

using namespace amalgam;

namespace {

Ring z(long n) { return mk_zmod(n); }

Ring f4() {
  auto z2 = z(2);
  return mk_poly_quot(z2, PolyOverRing(z2, {1, 1, 1}));
}

}  // namespace

TEST_CASE("Prüfer variants") {
  for (const auto& r : {z(4), z(6), f4(), mk_truncated_poly(2, 2, 3), mk_product(z(4), z(2)).ring}) {
    CAPTURE(r.provenance());
    auto p = is_prufer(r);
    CHECK(p.verdict.value);
    CHECK(p.invertibility);
    CHECK(p.distributive);
    CHECK(p.rtop);
  }
  auto z6 = z(6);
  CHECK(has_rtop(z6, principal_ideal(z6, 2)).value);
  CHECK(has_rtop(f4(), zero_ideal(f4())).value);
  auto r63 = mk_truncated_poly(2, 2, 3);
  CHECK(has_rtop(r63, spectrum(r63).maximals[0]).value);
}

TEST_CASE("locally Prüfer and total") {
  CHECK(is_locally_prufer(mk_truncated_poly(2, 2, 3)).value);
  CHECK(is_locally_prufer(mk_product(z(4), z(2)).ring).value);
  CHECK(is_locally_prufer(z(1)).value);
  CHECK(is_total_ring_of_fractions(mk_truncated_poly(2, 2, 3)).value);
  CHECK(is_total_ring_of_fractions(z(6)).value);
  CHECK(is_total_ring_of_fractions(f4()).value);
}

TEST_CASE("arithmetical") {
  CHECK(is_arithmetical(z(4)).value);
  CHECK(is_arithmetical(f4()).value);
  auto d = duplication(principal_ideal(z(4), 2));
  auto a = is_arithmetical(d.carrier());
  CHECK_FALSE(a.value);
  REQUIRE(a.witness);
  CHECK(a.witness->items == std::vector<std::string>{"[0,2]", "[2,0]"});
}

TEST_CASE("weak global dimension and semihereditary") {
  CHECK(has_wgd_le_1(z(6)).value);
  auto w = has_wgd_le_1(z(4));
  CHECK_FALSE(w.value);
  REQUIRE(w.witness);
  CHECK(w.witness->items == std::vector<std::string>{"2"});
  CHECK(has_wgd_le_1(f4()).value);
  CHECK(is_semihereditary(duplication(principal_ideal(z(6), 2)).carrier()).value);
  CHECK_FALSE(is_semihereditary(z(4)).value);
  CHECK(is_semihereditary(f4()).value);
}

TEST_CASE("Gauss polynomials") {
  auto z4 = z(4);
  CHECK(is_gauss_polynomial(PolyOverRing(z4, {1}), 2).value);
  CHECK(is_gauss_polynomial(PolyOverRing(z4, {}), 2).value);
  auto r63 = mk_truncated_poly(2, 2, 3);
  const Elem u = r63.element("x"), v = r63.element("y");
  auto g = is_gauss_polynomial(PolyOverRing(r63, {v, u}), 1);
  CHECK_FALSE(g.value);
  REQUIRE(g.witness);
  CHECK(g.witness->kind == "polynomial-pair");
}

TEST_CASE("Gauss criterion and oracle") {
  auto r63 = mk_truncated_poly(2, 2, 3);
  auto start = std::chrono::steady_clock::now();
  auto c = gauss_criterion(r63);
  auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed < std::chrono::seconds(1));
  CHECK_FALSE(c.value);
  REQUIRE(c.witness);
  CHECK(c.witness->items == std::vector<std::string>{"x", "y"});

  auto g = is_gauss(r63);
  CHECK_FALSE(g.verdict.value);
  CHECK(g.oracle.refuted);
  CHECK(g.oracle.p_degree == 1);
  CHECK(g.oracle.g_degree == 1);

  auto d = is_gauss(duplication(principal_ideal(z(4), 2)).carrier());
  CHECK(d.verdict.value);
  CHECK(d.oracle.ran);
  CHECK(d.oracle.complete);
  CHECK(d.oracle.p_degree == 2);
  CHECK(d.oracle.g_degree == 2);
  CHECK(is_gauss(f4()).verdict.value);
}

TEST_CASE("Gauss is local") {
  for (const auto& r : {z(12), mk_product(mk_truncated_poly(2, 2, 2), z(3)).ring, mk_product(z(4), z(2)).ring}) {
    CAPTURE(r.provenance());
    auto whole = is_gauss(r).verdict.value;
    bool all = true;
    for (const auto& loc : local_picture(r).locals) all = all && is_gauss(loc.carrier).verdict.value;
    CHECK(whole == all);
  }
}

TEST_CASE("classification vectors") {
  auto z6 = classify(z(6));
  for (const auto& v : z6.verdicts)
    if (v.name != "local" && v.name != "chain_ring") CHECK_MESSAGE(v.decision.value, v.name);
  CHECK_FALSE(z6.verdict("local"));
  CHECK_FALSE(z6.verdict("chain_ring"));

  auto z4 = classify(z(4));
  CHECK_FALSE(z4.verdict("P1_semihereditary"));
  CHECK_FALSE(z4.verdict("P2_wgd_le_1"));
  CHECK(z4.verdict("P3_arithmetical"));
  CHECK(z4.verdict("P4_gauss"));
  CHECK(z4.verdict("P5_prufer"));
  CHECK(z4.verdict("locally_prufer"));
  CHECK(z4.verdict("total_ring_of_fractions"));
  CHECK(z4.decision("P2_wgd_le_1").witness);

  auto d = classify(duplication(principal_ideal(z(4), 2)).carrier());
  CHECK_FALSE(d.verdict("P3_arithmetical"));
  CHECK(d.verdict("P4_gauss"));

  auto r63 = classify(mk_truncated_poly(2, 2, 3));
  CHECK_FALSE(r63.verdict("P4_gauss"));
  CHECK_FALSE(r63.verdict("P3_arithmetical"));
  CHECK_FALSE(r63.verdict("P2_wgd_le_1"));
  CHECK_FALSE(r63.verdict("P1_semihereditary"));
  CHECK(r63.verdict("locally_prufer"));
  CHECK(r63.verdict("P5_prufer"));
  CHECK(r63.verdict("total_ring_of_fractions"));
  CHECK(r63.verdict("local"));

  auto zero = classify(z(1));
  CHECK(zero.zero_ring);
  for (const auto& v : zero.verdicts) CHECK(v.decision.value);
}

TEST_CASE("products") {
  CHECK(product_consistency_check(z(2), z(3)).consistent);
  auto p = product_consistency_check(z(4), z(2));
  CHECK(p.consistent);
  CHECK(classify(mk_product(z(4), z(2)).ring).verdict("P3_arithmetical"));
  CHECK_FALSE(classify(mk_product(z(4), z(2)).ring).verdict("P2_wgd_le_1"));
  CHECK(product_consistency_check(z(4), z(1)).consistent);
}
