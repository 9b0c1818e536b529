#include "doctest.h"

#include <random>

#include "amalgam/constructors.hpp"
#include "amalgam/ideal.hpp"

using namespace amalgam;

namespace {

std::vector<Subset> member_sets(const std::vector<Ideal>& v) {
  std::vector<Subset> out;
  for (const auto& i : v) out.push_back(i.members());
  return out;
}

std::vector<Ring> small_rings() {
  auto z2 = mk_zmod(2), z3 = mk_zmod(3), z4 = mk_zmod(4);
  return {mk_zmod(1),
          z2,
          mk_zmod(6),
          mk_zmod(8),
          mk_zmod(12),
          mk_poly_quot(z2, PolyOverRing(z2, {1, 1, 1})),
          mk_poly_quot(z2, PolyOverRing(z2, {0, 0, 1})),
          mk_poly_quot(z3, PolyOverRing(z3, {0, 0, 1})),
          mk_poly_quot(z4, PolyOverRing(z4, {2, 0, 1})),
          mk_product(z2, z2).ring,
          mk_product(z4, z2).ring,
          mk_truncated_poly(2, 2, 2),
          mk_truncated_poly(2, 2, 3)};
}

}  // namespace

TEST_CASE("generation") {
  auto z4 = mk_zmod(4), z6 = mk_zmod(6);
  CHECK(ideal_generate(z4, {2}).members() == Subset::of(4, {0, 2}));
  CHECK(ideal_generate(z6, {2, 3}).is_unit());
  CHECK(ideal_generate(z6, {2, 3}).generators() == std::vector<Elem>{2, 3});
  CHECK(ideal_generate(z6, {}).is_zero());
}

TEST_CASE("arithmetic") {
  auto z8 = mk_zmod(8);
  auto i2 = principal_ideal(z8, 2), i4 = principal_ideal(z8, 4);
  auto a = ideal_arith(i2, i4);
  CHECK(a.intersection == i4);
  CHECK(a.product.is_zero());
  CHECK(a.sum == i2);
  CHECK(ideal_sum(i2, zero_ideal(z8)) == i2);
  CHECK(ideal_product(i2, unit_ideal(z8)) == i2);
  auto z4 = mk_zmod(4);
  CHECK(ideal_colon(zero_ideal(z4), principal_ideal(z4, 2)) == principal_ideal(z4, 2));
  CHECK(annihilator(z4, 2) == principal_ideal(z4, 2));
  CHECK_THROWS_AS(ideal_sum(i2, zero_ideal(z4)), InvalidArgument);
}

TEST_CASE("lattices") {
  auto z8 = mk_zmod(8);
  auto l = all_ideals(z8);
  REQUIRE(l.size() == 4);
  CHECK(l[0].is_zero());
  CHECK(l[1] == principal_ideal(z8, 4));
  CHECK(l[2] == principal_ideal(z8, 2));
  CHECK(l[3].is_unit());
  auto z2 = mk_zmod(2);
  CHECK(all_ideals(mk_poly_quot(z2, PolyOverRing(z2, {1, 1, 1}))).size() == 2);
  auto z6 = mk_zmod(6);
  auto l6 = all_ideals(z6);
  REQUIRE(l6.size() == 4);
  CHECK(l6[1] == principal_ideal(z6, 3));
  CHECK(l6[2] == principal_ideal(z6, 2));
  Budget tight;
  tight.lattice_size = 4;
  CHECK_THROWS_AS(all_ideals(z8, tight), BudgetExceeded);
}

TEST_CASE("subgroup filter oracle matches the closure lattice") {
  for (const auto& r : small_rings()) {
    CAPTURE(r.provenance());
    CHECK(member_sets(ideals_by_subgroup_filter(r)) == member_sets(all_ideals(r)));
  }
}

TEST_CASE("regular ideals") {
  auto z4 = mk_zmod(4);
  CHECK_FALSE(is_regular_ideal(z4, principal_ideal(z4, 2)).regular);
  auto u = is_regular_ideal(z4, unit_ideal(z4));
  CHECK(u.regular);
  CHECK(*u.witness == 1);
  CHECK_FALSE(is_regular_ideal(z4, zero_ideal(z4)).regular);
}

TEST_CASE("spectrum and radicals") {
  auto z6 = mk_zmod(6);
  auto s = spectrum(z6);
  REQUIRE(s.primes.size() == 2);
  CHECK(s.primes[0] == principal_ideal(z6, 3));
  CHECK(s.primes[1] == principal_ideal(z6, 2));
  auto z2 = mk_zmod(2);
  auto f4 = mk_poly_quot(z2, PolyOverRing(z2, {1, 1, 1}));
  auto sf = spectrum(f4);
  REQUIRE(sf.primes.size() == 1);
  CHECK(sf.primes[0].is_zero());
  auto r63 = mk_truncated_poly(2, 2, 3);
  auto sr = spectrum(r63);
  REQUIRE(sr.maximals.size() == 1);
  CHECK(sr.maximals[0].members() == regularity_scan(r63).zerodivisors);

  auto z4 = mk_zmod(4);
  auto r4 = radicals(z4);
  CHECK(r4.nilradical == principal_ideal(z4, 2));
  CHECK(r4.jacobson == principal_ideal(z4, 2));
  auto r6 = radicals(z6);
  CHECK(r6.nilradical.is_zero());
  CHECK(r6.jacobson.is_zero());
  CHECK(radicals(mk_product(z2, f4).ring).jacobson.is_zero());
  CHECK(spectrum(mk_zmod(1)).primes.empty());

  // Every ideal left out of the spectrum fails primality with a witness.
  for (const auto& i : all_ideals(z6 )) {
    auto t = prime_test(i);
    bool listed = std::find(s.primes.begin(), s.primes.end(), i) != s.primes.end();
    CHECK(t.prime == listed);
    if (!t.prime && !i.is_unit()) {
      REQUIRE(t.witness);
      CHECK(i.contains(z6.mul(t.witness->first, t.witness->second)));
    }
  }
}

TEST_CASE("content and chains") {
  auto z4 = mk_zmod(4);
  CHECK(content(PolyOverRing(z4, {2, 2})) == principal_ideal(z4, 2));
  CHECK(content(PolyOverRing(z4, {})).is_zero());
  auto r63 = mk_truncated_poly(2, 2, 3);
  const Elem x = r63.element("x"), y = r63.element("y");
  auto c = content(PolyOverRing(r63, {y, x}));
  CHECK(c.size() == 32);

  CHECK(ideals_totally_ordered(mk_zmod(8)).chain);
  auto z6 = ideals_totally_ordered(mk_zmod(6));
  CHECK_FALSE(z6.chain);
  REQUIRE(z6.incomparable);
  CHECK(z6.incomparable->first.size() + z6.incomparable->second.size() == 5);
}

TEST_CASE("modular law and Dedekind-Mertens containment") {
  for (const auto& r : small_rings()) {
    if (r.size() > 16) continue;
    CAPTURE(r.provenance());
    auto l = all_ideals(r);
    for (const auto& i : l)
      for (const auto& j : l)
        for (const auto& k : l) {
          auto lhs = ideal_intersection(i, ideal_sum(j, k));
          auto rhs = ideal_sum(ideal_intersection(i, j), ideal_intersection(i, k));
          CHECK(rhs.subset_of(lhs));
        }
  }
  std::mt19937 rng(7);
  for (const auto& r : small_rings()) {
    if (r.is_zero_ring()) continue;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
    for (int trial = 0; trial < 200; ++trial) {
      PolyOverRing f(r, {pick(rng), pick(rng), pick(rng)});
      PolyOverRing g(r, {pick(rng), pick(rng), pick(rng)});
      CHECK(content(f * g).subset_of(ideal_product(content(f), content(g))));
    }
  }
}

TEST_CASE("lattice tables") {
  auto z12 = mk_zmod(12);
  IdealLattice l(z12);
  CHECK(l.count() == 6);
  for (int i = 0; i < l.count(); ++i)
    for (int j = 0; j < l.count(); ++j) {
      CHECK(l.ideals()[l.join(i, j)] == ideal_sum(l.ideals()[i], l.ideals()[j]));
      CHECK(l.ideals()[l.meet(i, j)] == ideal_intersection(l.ideals()[i], l.ideals()[j]));
      CHECK(l.ideals()[l.product(i, j)] == ideal_product(l.ideals()[i], l.ideals()[j]));
    }
  for (Elem x = 0; x < 12; ++x) CHECK(l.ideals()[l.principal(x)] == principal_ideal(z12, x));
}

TEST_CASE("kernels, preimages and extensions") {
  auto z8 = mk_zmod(8), z4 = mk_zmod(4);
  auto h = mk_hom(z8, z4, {0, 1, 2, 3, 0, 1, 2, 3});
  CHECK(kernel(h) == principal_ideal(z8, 4));
  CHECK(preimage(h, principal_ideal(z4, 2)) == principal_ideal(z8, 2));
  CHECK(extension(h, principal_ideal(z8, 2)) == principal_ideal(z4, 2));
}
