#include "doctest.h"

#include "amalgam/constructors.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/kernels.hpp"

using namespace amalgam;

TEST_CASE("axiom scan: serial and parallel agree") {
  auto r = mk_truncated_poly(2, 2, 3);
  CHECK_FALSE(kernels::ring_axioms_serial(r.tables()));
  CHECK_FALSE(kernels::ring_axioms_parallel(r.tables()));
  for (Elem row : {0u, 5u, 37u, 63u}) {
    RingTables t = r.tables();
    t.mul[row * 64 + 9] = t.mul[row * 64 + 9] ^ 1U;
    t.mul[9 * 64 + row] = t.mul[row * 64 + 9];
    auto s = kernels::ring_axioms_serial(t), p = kernels::ring_axioms_parallel(t);
    REQUIRE(s);
    REQUIRE(p);
    CHECK(*s == *p);
  }
}

TEST_CASE("Gauss search: serial and parallel agree") {
  auto z2 = mk_zmod(2);
  std::vector<Ring> rings{mk_zmod(4), mk_zmod(6), mk_poly_quot(z2, PolyOverRing(z2, {0, 0, 1})),
                          mk_truncated_poly(2, 2, 2), mk_product(mk_zmod(4), z2).ring};
  for (const auto& r : rings) {
    CAPTURE(r.provenance());
    IdealLattice l(r);
    auto t = l.content_tables();
    kernels::GaussSearch s{2, 2, 0};
    auto a = kernels::gauss_search_serial(t, s), b = kernels::gauss_search_parallel(t, s);
    CHECK(a.complete == b.complete);
    CHECK(a.pairs == b.pairs);
    CHECK(a.failure.has_value() == b.failure.has_value());
  }
}

TEST_CASE("Gauss search finds the first failure over R63") {
  auto r = mk_truncated_poly(2, 2, 3);
  IdealLattice l(r);
  auto t = l.content_tables();
  kernels::GaussSearch s{1, 1, 0};
  auto a = kernels::gauss_search_serial(t, s), b = kernels::gauss_search_parallel(t, s);
  REQUIRE(a.failure);
  REQUIRE(b.failure);
  CHECK(a.failure->p == b.failure->p);
  CHECK(a.failure->g == b.failure->g);
  CHECK(a.pairs == b.pairs);
  CHECK(a.failure->content_pg != a.failure->content_product);

  const Elem x = r.element("x"), y = r.element("y");
  auto fixed = kernels::gauss_polynomial_parallel(t, {y, x}, 1);
  REQUIRE(fixed.failure);
  auto fixed_s = kernels::gauss_polynomial_serial(t, {y, x}, 1);
  REQUIRE(fixed_s.failure);
  CHECK(fixed.failure->g == fixed_s.failure->g);
}

TEST_CASE("pair budget stops a confirming search") {
  IdealLattice l(mk_zmod(8));
  auto t = l.content_tables();
  auto out = kernels::gauss_search_parallel(t, {2, 2, 1000});
  CHECK_FALSE(out.complete);
  CHECK_FALSE(out.failure);
}

TEST_CASE("distributivity census: serial and parallel agree") {
  auto z4 = mk_zmod(4), z2 = mk_zmod(2);
  std::vector<Ring> rings{mk_zmod(8), mk_zmod(12), mk_product(z4, z2).ring, mk_truncated_poly(2, 2, 2),
                          mk_truncated_poly(2, 2, 3)};
  for (const auto& r : rings) {
    CAPTURE(r.provenance());
    IdealLattice l(r);
    auto ops = l.ops();
    for (bool reg : {false, true}) {
      auto a = kernels::census_serial(ops, reg), b = kernels::census_parallel(ops, reg);
      CHECK(a.triples == b.triples);
      CHECK(a.product_violations == b.product_violations);
      CHECK(a.lattice_violations == b.lattice_violations);
      CHECK(a.product_witness == b.product_witness);
      CHECK(a.lattice_witness == b.lattice_witness);
    }
  }
  CHECK(kernels::census_parallel(IdealLattice(mk_zmod(8)).ops(), false).product_violations == 0);
  CHECK(kernels::census_parallel(IdealLattice(mk_truncated_poly(2, 2, 2)).ops(), false).lattice_violations > 0);
}
