#include "doctest.h"

#include "amalgam/amalgamation.hpp"
#include "amalgam/isomorphism.hpp"

using namespace amalgam;

namespace {

Ring z(long n) { return mk_zmod(n); }

Ring dual2() {
  auto z2 = z(2);
  return mk_poly_quot(z2, PolyOverRing(z2, {0, 0, 1}));
}

AmalgamatedRing e1() {
  auto z4 = z(4), z2 = z(2);
  return build_amalgamation(mk_hom(z4, z2, {0, 1, 0, 1}), unit_ideal(z2));
}

AmalgamatedRing e2() {
  auto z2 = z(2), d2 = dual2();
  return build_amalgamation(mk_hom(z2, d2, {0, 1}), principal_ideal(d2, d2.element("x")));
}

AmalgamatedRing e8() {
  auto z2 = z(2);
  auto p = mk_product(z2, z2);
  return build_amalgamation(mk_hom(z2, p.ring, {p.pair(0, 0), p.pair(1, 1)}), principal_ideal(p.ring, p.pair(0, 1)));
}

bool isomorphic(const Ring& a, const Ring& b) { return find_isomorphism(a, b).iso.has_value(); }

}  // namespace

TEST_CASE("construction") {
  auto m1 = e1();
  CHECK(m1.carrier().size() == 8);
  CHECK(m1.sub.inclusion.surjective());

  auto m2 = e2();
  CHECK(m2.carrier().size() == 4);
  auto sp = spectrum(m2.carrier());
  REQUIRE(sp.is_local());
  const auto& mx = sp.maximals[0];
  CHECK(ideal_product(mx, mx).is_zero());
  CHECK(isomorphic(m2.carrier(), dual2()));

  auto z6 = z(6);
  auto d = duplication(principal_ideal(z6, 2));
  CHECK(d.carrier().size() == 18);
  CHECK(d.carrier().provenance() == "(dup (zmod 6) (ideal (zmod 6) 2))");
  CHECK(d.carrier().name(d.element(1, 3)) == "[1,3]");
  CHECK_THROWS_AS(d.element(1, 2), InvalidArgument);

  auto z4 = z(4);
  auto d4 = duplication(principal_ideal(z4, 2));
  CHECK(d4.carrier().size() == 8);
  CHECK(spectrum(d4.carrier()).is_local());
  CHECK(isomorphic(duplication(zero_ideal(z4)).carrier(), z4));
  CHECK(isomorphic(duplication(unit_ideal(z4)).carrier(), mk_product(z4, z4).ring));

  CHECK(m2.conductor_ambient.size() == 2);
  CHECK(m2.b0.size() == 2);
  CHECK(m2.conductor == m2.b0);
}

TEST_CASE("ideal join") {
  auto z6 = z(6);
  auto d = duplication(principal_ideal(z6, 2));
  auto j = ideal_join(d, principal_ideal(z6, 3));
  CHECK(isomorphic(mk_quotient(d.carrier(), j).ring, z(3)));
  CHECK(ideal_join(d, zero_ideal(z6)) == d.b0);
  CHECK(ideal_join(d, unit_ideal(z6)).is_unit());
}

TEST_CASE("quotient isomorphisms") {
  for (const auto& m : {e1(), e2(), e8(), duplication(principal_ideal(z(4), 2)), duplication(zero_ideal(z(6)))}) {
    CAPTURE(m.carrier().provenance());
    auto r = quotient_isos_check(m);
    CHECK(r.ok());
    CHECK(r.checks.size() >= 4);
    for (const auto& c : r.checks) CHECK(c.path == "canonical");
  }
  CHECK(quotient_isos_check(e1()).checks.size() == 5);
  CHECK(isomorphic(mk_quotient(e1().carrier(), e1().b0).ring, z(4)));
}

TEST_CASE("a wrong ideal makes the induced map fail with a witness") {
  auto m = e1();
  auto r = check_induced_isomorphism("carrier/conductor ≅ A", m.conductor, m.pA);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("not well defined") != std::string::npos);
}

TEST_CASE("fiber products") {
  for (const auto& m : {e1(), e2(), e8(), duplication(principal_ideal(z(6), 2))}) {
    auto c = fiberproduct_identity_check(m);
    CHECK(c.equal);
    CHECK(c.fiber_size == c.amalg_size);
  }
  auto r = z(4);
  auto fp = build_fiber_product(identity_hom(r), identity_hom(r));
  CHECK(isomorphic(fp.carrier(), r));
  CHECK_THROWS_AS(build_fiber_product(identity_hom(r), identity_hom(z(2))), InvalidArgument);
}

TEST_CASE("prime lifts and bars") {
  auto m = e8();
  auto sp = spectrum(m.carrier());
  CHECK(sp.maximals.size() == 2);
  const Ring& B = m.B();
  auto q = principal_ideal(B, B.element("[1,0]"));  // Z2 × 0
  auto bar = prime_bar(m, q);
  CHECK(std::find(sp.maximals.begin(), sp.maximals.end(), bar) != sp.maximals.end());
  auto q2 = principal_ideal(B, B.element("[0,1]"));
  CHECK_THROWS_AS(prime_bar(m, q2), InvalidArgument);

  auto z4 = z(4);
  auto d = duplication(principal_ideal(z4, 2));
  auto lift = prime_lift(d, principal_ideal(z4, 2));
  CHECK(spectrum(d.carrier()).maximals[0] == lift);
}

TEST_CASE("spectrum transfer") {
  auto r8 = spectrum_transfer(e8());
  CHECK(r8.ok());
  CHECK(r8.direct.maximals.size() == 2);
  CHECK(r8.max_from_lifts == 1);
  CHECK(r8.max_from_bars == 1);

  auto d6 = spectrum_transfer(duplication(principal_ideal(z(6), 2)));
  CHECK(d6.ok());
  CHECK(d6.direct.maximals.size() == 3);
  CHECK(d6.max_from_lifts == 2);
  CHECK(d6.max_from_bars == 1);

  auto r1 = spectrum_transfer(e1());
  CHECK(r1.ok());
  CHECK(r1.direct.primes.size() == 2);

  auto z0 = spectrum_transfer(duplication(zero_ideal(z(6))));
  CHECK(z0.ok());
  CHECK(z0.bars.empty());
  CHECK(z0.lifts.size() == 2);
}

TEST_CASE("locality") {
  auto c2 = is_local_amalg(e2());
  CHECK(c2.direct);
  CHECK(c2.agree());
  auto c1 = is_local_amalg(e1());
  CHECK_FALSE(c1.direct);
  CHECK(c1.agree());
  CHECK(is_local_amalg(duplication(principal_ideal(z(4), 2))).direct);
}

TEST_CASE("localized data") {
  auto z6 = z(6);
  auto d = duplication(principal_ideal(z6, 2));
  auto at2 = localized_data(d, principal_ideal(z6, 2));
  CHECK(at2.S_p.members() == Subset::of(6, {1, 3, 5}));
  CHECK(at2.b_Sp_zero);
  CHECK_FALSE(at2.B_Sp_zero);
  CHECK(isomorphic(at2.B_Sp.carrier, z(2)));
  auto at3 = localized_data(d, principal_ideal(z6, 3));
  CHECK(at3.B_Sp_zero);

  auto m2 = e2();
  auto at0 = localized_data(m2, zero_ideal(m2.A()));
  CHECK(at0.S_p.members() == regularity_scan(m2.B()).units);
  CHECK(isomorphic(at0.B_Sp.carrier, dual2()));
  CHECK_FALSE(at0.b_Sp_zero);
  CHECK_FALSE(at0.f_p_surjective);
  CHECK(at0.preimage_local_zero);
}

TEST_CASE("localization isomorphisms") {
  auto z6 = z(6);
  auto d = duplication(principal_ideal(z6, 2));
  auto reports = localize_amalg_everywhere(d);
  CHECK(reports.size() == 3);
  bool zero_branch = false;
  for (const auto& r : reports) {
    CAPTURE(r.prime.describe());
    CHECK(r.ok());
    CHECK(r.iso.path == "canonical");
    if (r.zero_branch) {
      zero_branch = true;
      REQUIRE(r.degenerate);
      CHECK(r.source == principal_ideal(z6, 3));
    }
  }
  CHECK(zero_branch);

  auto lift2 = localize_amalg_at_prime(d, prime_lift(d, principal_ideal(z6, 2)));
  CHECK(lift2.branch == "lift");
  CHECK(isomorphic(localize_at(lift2.prime).carrier, z(2)));
  auto bar3 = localize_amalg_at_prime(d, prime_bar(d, principal_ideal(z6, 3)));
  CHECK(bar3.branch == "bar");
  CHECK(isomorphic(localize_at(bar3.prime).carrier, z(3)));

  for (const auto& m : {e1(), e2(), e8(), duplication(principal_ideal(z(4), 2))})
    for (const auto& r : localize_amalg_everywhere(m)) CHECK(r.ok());
}
