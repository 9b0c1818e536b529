#include "doctest.h"

#include "amalgam/constructors.hpp"
#include "amalgam/isomorphism.hpp"
#include "amalgam/localization.hpp"

using namespace amalgam;

namespace {

Ring zmod(long n) { return mk_zmod(n); }

PolyOverRing poly(const Ring& r, std::vector<Elem> c) { return PolyOverRing(r, std::move(c)); }

bool isomorphic(const Ring& a, const Ring& b) { return find_isomorphism(a, b).iso.has_value(); }

}  // namespace

TEST_CASE("zmod") {
  CHECK(zmod(1).size() == 1);
  CHECK(zmod(1).is_zero_ring());
  auto z4 = zmod(4);
  CHECK(z4.mul(2, 2) == 0);
  CHECK(z4.mul(3, 3) == 1);
  CHECK(z4.name(3) == "3");
  CHECK_THROWS_AS(mk_zmod(0), InvalidArgument);
  CHECK(isomorphic(zmod(6), mk_product(zmod(2), zmod(3)).ring));
}

TEST_CASE("poly quotients") {
  auto z2 = zmod(2);
  auto f4 = mk_poly_quot(z2, poly(z2, {1, 1, 1}));
  CHECK(f4.size() == 4);
  CHECK(regularity_scan(f4).units.count() == 3);

  auto d2 = mk_poly_quot(z2, poly(z2, {0, 0, 1}));
  const Elem x = d2.element("x");
  CHECK(d2.mul(x, x) == d2.zero());
  auto sp = spectrum(d2);
  REQUIRE(sp.maximals.size() == 1);
  CHECK(sp.maximals[0].members() == Subset::of(4, {d2.zero(), x}));

  auto z3 = zmod(3);
  CHECK(isomorphic(mk_poly_quot(z3, poly(z3, {0, 1})), z3));
  CHECK_THROWS_AS(mk_poly_quot(z3, poly(z3, {0, 2})), InvalidArgument);
}

TEST_CASE("truncated polynomials") {
  auto r63 = mk_truncated_poly(2, 2, 3);
  CHECK(r63.size() == 64);
  CHECK(spectrum(r63).is_local());
  CHECK(r63.name(2) == "x");
  CHECK(r63.name(4) == "y");
  auto z2 = zmod(2);
  CHECK(isomorphic(mk_truncated_poly(2, 1, 2), mk_poly_quot(z2, poly(z2, {0, 0, 1}))));
  CHECK(isomorphic(mk_truncated_poly(3, 1, 1), zmod(3)));
  CHECK_THROWS_AS(mk_truncated_poly(4, 1, 2), InvalidArgument);
  Budget tight;
  tight.ring_size = 32;
  CHECK_THROWS_AS(mk_truncated_poly(2, 2, 3, tight), BudgetExceeded);
}

TEST_CASE("products and quotients") {
  auto p = mk_product(zmod(2), zmod(3));
  CHECK(p.ring.size() == 6);
  CHECK(p.ring.one() == p.pair(1, 1));

  auto z4 = zmod(4);
  auto p42 = mk_product(z4, zmod(2));
  CHECK(p42.ring.size() == 8);
  CHECK(p42.proj1.surjective());
  CHECK(kernel(p42.proj1).members() == Subset::of(8, {p42.pair(0, 0), p42.pair(0, 1)}));

  auto z1 = zmod(1);
  CHECK(isomorphic(mk_product(z1, z4).ring, z4));

  auto q = mk_quotient(z4, principal_ideal(z4, 2));
  CHECK(isomorphic(q.ring, zmod(2)));
  CHECK(kernel(q.projection) == principal_ideal(z4, 2));
  CHECK(isomorphic(mk_quotient(z4, zero_ideal(z4)).ring, z4));
  CHECK(mk_quotient(z4, unit_ideal(z4)).ring.is_zero_ring());
}

TEST_CASE("homomorphisms") {
  auto z4 = zmod(4), z2 = zmod(2);
  auto red = mk_hom(z4, z2, {0, 1, 0, 1});
  CHECK(kernel(red) == principal_ideal(z4, 2));
  CHECK_THROWS_AS(mk_hom(z2, z4, {0, 2}), InvalidHom);
  auto p = mk_product(z2, z2);
  auto diag = mk_hom(z2, p.ring, {p.pair(0, 0), p.pair(1, 1)});
  CHECK(kernel(diag).is_zero());
  CHECK_THROWS_AS(mk_hom(z4, z2, {0, 1, 1, 1}), InvalidHom);

  Element a(z4, 3), b(z4, 2);
  CHECK((a * a).index() == 1);
  CHECK_THROWS_AS(a + Element(z2, 1), InvalidArgument);
}

TEST_CASE("corrupted tables are rejected") {
  auto z4 = zmod(4);
  RingTables t = z4.tables();
  t.mul[2 * 4 + 3] = 1;
  CHECK_THROWS_AS(make_ring(t, {"0", "1", "2", "3"}, "(broken)"), InvalidRing);
}

TEST_CASE("regularity") {
  auto r = regularity_scan(zmod(4));
  CHECK(r.units == Subset::of(4, {1, 3}));
  CHECK(r.zerodivisors == Subset::of(4, {0, 2}));
  CHECK(r.regular == r.units);
  CHECK(regularity_scan(zmod(6)).units == Subset::of(6, {1, 5}));
  auto z2 = zmod(2);
  auto f4 = mk_poly_quot(z2, poly(z2, {1, 1, 1}));
  CHECK(regularity_scan(f4).regular.count() == 3);
}

TEST_CASE("localization") {
  auto z6 = zmod(6);
  auto at2 = localize(z6, MultiplicativeSet::generated_by(z6, {2}));
  CHECK(isomorphic(at2.carrier, zmod(3)));
  CHECK(at2.torsion == Subset::of(6, {0, 3}));
  auto at3 = localize(z6, MultiplicativeSet::generated_by(z6, {3}));
  CHECK(isomorphic(at3.carrier, zmod(2)));

  auto units = localize(z6, MultiplicativeSet::units_of(z6));
  CHECK(units.canonical.bijective());

  auto zero = localize(z6, MultiplicativeSet::generated_by(z6, {0}));
  CHECK(zero.carrier.is_zero_ring());

  CHECK(total_quotient_ring(zmod(4)).canonical.bijective());
  CHECK(total_quotient_ring(mk_truncated_poly(2, 2, 3)).canonical.bijective());

  CHECK_THROWS_AS(MultiplicativeSet(z6, Subset::of(6, {1, 2})), InvalidArgument);
}

TEST_CASE("localization at primes of a product") {
  auto p = mk_product(zmod(4), zmod(3));
  for (const auto& m : spectrum(p.ring).maximals) {
    auto loc = localize_at(m);
    CHECK(spectrum(loc.carrier).is_local());
    CHECK(loc.canonical.surjective());
  }
}

TEST_CASE("isomorphism search") {
  auto z4 = zmod(4), z2 = zmod(2);
  auto none = find_isomorphism(z4, mk_product(z2, z2).ring);
  CHECK_FALSE(none.iso);
  CHECK(none.reason.find("unit counts") != std::string::npos);
  auto self = find_isomorphism(z4, z4);
  REQUIRE(self.iso);
  CHECK(self.iso->map() == std::vector<Elem>{0, 1, 2, 3});

  auto d2 = mk_poly_quot(z2, poly(z2, {0, 0, 1}));
  auto f4 = mk_poly_quot(z2, poly(z2, {1, 1, 1}));
  CHECK_FALSE(find_isomorphism(d2, f4).iso);
  CHECK_FALSE(find_isomorphism(d2, z4).iso);

  // Z2[x]/(x^2) x Z2 against Z2[x]/(x^3 + x^2): same size and characteristic.
  auto a = mk_product(d2, z2).ring;
  auto b = mk_poly_quot(z2, poly(z2, {0, 0, 1, 1}));
  CHECK(isomorphic(a, b));
}

TEST_CASE("isomorphism search on random relabelings") {
  auto base = mk_truncated_poly(2, 2, 2);
  const std::size_t n = base.size();
  std::vector<Elem> perm(n);
  for (Elem i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t seed = 12345;
  for (int round = 0; round < 5; ++round) {
    for (std::size_t i = n - 1; i > 0; --i) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      std::swap(perm[i], perm[(seed >> 33) % (i + 1)]);
    }
    RingTables t;
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        t.add[perm[x] * n + perm[y]] = perm[base.add(x, y)];
        t.mul[perm[x] * n + perm[y]] = perm[base.mul(x, y)];
      }
    t.zero = perm[base.zero()];
    t.one = perm[base.one()];
    std::vector<std::string> names(n);
    for (Elem x = 0; x < n; ++x) names[perm[x]] = "e" + std::to_string(x);
    auto shuffled = make_ring(t, names, "(relabel " + std::to_string(round) + ")");
    auto found = find_isomorphism(base, shuffled);
    REQUIRE(found.iso);
  }
}
