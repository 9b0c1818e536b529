#include "amalgam/amalgamation.hpp"

#include <algorithm>
#include <functional>

#include "amalgam/expr.hpp"
#include "amalgam/isomorphism.hpp"

namespace amalgam {

namespace {

Subset image_plus_ideal(const RingHom& f, const Ideal& b) {
  const Ring& B = f.target();
  Subset s(B.size());
  const auto bm = b.members().elements();
  for (Elem a = 0; a < f.source().size(); ++a)
    for (Elem beta : bm) s.insert(B.add(f(a), beta));
  return s;
}

std::vector<std::pair<Elem, Elem>> pairs_of(const Subring& sub, std::size_t right) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem c = 0; c < sub.ring.size(); ++c) {
    const Elem e = sub.inclusion(c);
    out.emplace_back(static_cast<Elem>(e / right), static_cast<Elem>(e % right));
  }
  return out;
}

RingHom coordinate(const Subring& sub, const std::vector<std::pair<Elem, Elem>>& pairs, const Ring& target, bool first) {
  std::vector<Elem> m;
  for (const auto& [x, y] : pairs) m.push_back(first ? x : y);
  return mk_hom(sub.ring, target, std::move(m));
}

std::string names_of(const Ring& r, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ", ";
    first = false;
    out += r.name(e);
  });
  return out + "}";
}

// x/t |-> image(x, t) as a map out of a localized ring; checks that the value
// depends only on the fraction class.
std::optional<std::vector<Elem>> localized_map(const LocalizedRing& src, const std::function<Elem(Elem, Elem)>& image,
                                               std::string& problem) {
  const std::size_t q = src.carrier.size();
  std::vector<long> m(q, -1);
  const Ring& base = src.base;
  for (Elem x = 0; x < base.size(); ++x)
    for (std::size_t k = 0; k < src.set_members.size(); ++k) {
      const Elem t = src.set_members[k];
      const Elem cls = src.class_of[x * src.set_members.size() + k];
      const Elem v = image(x, t);
      if (m[cls] < 0) {
        m[cls] = v;
      } else if (m[cls] != static_cast<long>(v)) {
        problem = "map is not well defined on the class of " + base.name(x) + "/" + base.name(t);
        return std::nullopt;
      }
    }
  return std::vector<Elem>(m.begin(), m.end());
}

IsoCheck iso_from_map(std::string claim, const Ring& src, const Ring& dst,
                      std::optional<std::vector<Elem>> map, std::string problem, const Budget& budget) {
  IsoCheck c;
  c.claim = std::move(claim);
  c.path = "canonical";
  if (map) {
    try {
      RingHom h = mk_hom(src, dst, std::move(*map));
      if (h.bijective()) {
        c.ok = true;
        return c;
      }
      problem = h.injective() ? "canonical map is not onto" : "canonical map is not injective";
    } catch (const InvalidHom& e) {
      problem = std::string("canonical map is not a homomorphism: ") + e.what();
    }
  }
  c.path = "search";
  auto found = find_isomorphism(src, dst, budget);
  c.ok = found.iso.has_value();
  c.detail = problem + (c.ok ? "; an isomorphism exists" : "; " + found.reason);
  return c;
}

}  // namespace

Elem AmalgamatedRing::element(Elem a, Elem y) const { return sub.local(ambient.pair(a, y)); }

AmalgamatedRing build_amalgamation(const RingHom& f, const Ideal& b, const Budget& budget) {
  const Ring& A = f.source();
  const Ring& B = f.target();
  if (!(b.ring() == B)) throw InvalidArgument("amalg: the ideal must belong to the target of f");
  if (A.size() * b.size() > budget.ring_size)
    throw BudgetExceeded("amalgamation of size " + std::to_string(A.size() * b.size()) + " exceeds the ring size cap " +
                         std::to_string(budget.ring_size));

  AmalgamatedRing m{AmalgamationSpec{f, b}, mk_product(A, B, budget), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  Subset members(m.ambient.ring.size());
  const auto bm = b.members().elements();
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem beta : bm) members.insert(m.ambient.pair(a, B.add(f(a), beta)));
  enforce(members.count() == A.size() * b.size(), "|A ⋈ b| differs from |A||b|");

  const bool dup = A == B && f.map() == identity_hom(A).map();
  std::string prov = dup ? expr::dup(b) : expr::amalg(f, b);
  m.sub = mk_subring(m.ambient.ring, members, std::move(prov), Ring::Kind::Amalgamation, {A, B}, budget);
  const Ring& C = m.sub.ring;
  m.pair_of = pairs_of(m.sub, B.size());

  std::vector<Elem> io;
  for (Elem a = 0; a < A.size(); ++a) io.push_back(m.element(a, f(a)));
  m.iota = mk_hom(A, C, std::move(io));
  m.pA = coordinate(m.sub, m.pair_of, A, true);
  m.pB = coordinate(m.sub, m.pair_of, B, false);

  const Subset imageset = image_plus_ideal(f, b);
  m.image_B = mk_subring(B, imageset, "(image-plus " + expr::hom(f) + " " + expr::ideal(b) + ")", Ring::Kind::Subring,
                         {B}, budget);
  Subset b_local(m.image_B.ring.size());
  for (Elem beta : bm) b_local.insert(m.image_B.local(beta));
  m.gamma_target = mk_quotient(m.image_B.ring, Ideal::from_members(m.image_B.ring, b_local), budget);
  std::vector<Elem> g;
  for (Elem c = 0; c < C.size(); ++c) g.push_back(m.gamma_target.projection(m.image_B.local(m.pB(c))));
  m.gamma = mk_hom(C, m.gamma_target.ring, std::move(g));

  m.preimage_b = preimage(f, b);
  Subset b0(C.size()), cond_amb(m.ambient.ring.size()), cond(C.size()), ker_pB(C.size());
  for (Elem c = 0; c < C.size(); ++c) {
    const auto [x, y] = m.pair_of[c];
    if (x == A.zero()) b0.insert(c);
    if (m.preimage_b.contains(x) && b.contains(y)) cond.insert(c);
    if (m.preimage_b.contains(x) && y == B.zero()) ker_pB.insert(c);
  }
  m.preimage_b.members().for_each([&](Elem x) {
    for (Elem beta : bm) cond_amb.insert(m.ambient.pair(x, beta));
  });
  m.b0 = Ideal::from_members(C, b0);
  m.conductor_ambient = Ideal::from_members(m.ambient.ring, cond_amb);
  m.conductor = Ideal::from_members(C, cond);

  const std::string& name = C.provenance();
  enforce(m.b0.size() == b.size(), "b0 does not have |b| elements in " + name);
  enforce(m.conductor.size() == cond_amb.count(), "conductor is not contained in the carrier of " + name);
  enforce(compose(m.pA, m.iota).map() == identity_hom(A).map(), "pA ∘ iota is not the identity on " + name);
  enforce(m.iota.injective(), "iota is not injective on " + name);
  enforce(m.pA.surjective(), "pA is not onto for " + name);
  enforce(kernel(m.pA) == m.b0, "Ker(pA) differs from {0} × b in " + name);
  enforce(kernel(m.pB).members() == ker_pB, "Ker(pB) differs from f^{-1}(b) × {0} in " + name);
  enforce(m.pB.image_set() == imageset, "pB(carrier) differs from f(A) + b in " + name);
  enforce(m.gamma.surjective(), "gamma is not onto for " + name);
  enforce(kernel(m.gamma) == m.conductor, "Ker(gamma) differs from f^{-1}(b) × b in " + name);
  return m;
}

AmalgamatedRing duplication(const Ideal& a, const Budget& budget) {
  return build_amalgamation(identity_hom(a.ring()), a, budget);
}

IsoCheck check_induced_isomorphism(std::string claim, const Ideal& i, const RingHom& h, const Budget& budget) {
  const Ring& R = i.ring();
  auto q = mk_quotient(R, i, budget);
  std::vector<long> m(q.ring.size(), -1);
  std::vector<Elem> rep(q.ring.size());
  std::string problem;
  bool defined = true;
  for (Elem x = 0; x < R.size() && defined; ++x) {
    const Elem c = q.projection(x);
    if (m[c] < 0) {
      m[c] = h(x);
      rep[c] = x;
    } else if (m[c] != static_cast<long>(h(x))) {
      problem = "not well defined: " + R.name(x) + " and " + R.name(rep[c]) + " agree modulo the ideal but not under the map";
      defined = false;
    }
  }
  std::optional<std::vector<Elem>> map;
  if (defined) map = std::vector<Elem>(m.begin(), m.end());
  IsoCheck c = iso_from_map(std::move(claim), q.ring, h.target(), std::move(map), problem, budget);
  if (!c.ok || c.path != "canonical") {
    const Ideal k = kernel(h);
    if (!(k == i))
      c.detail += "; Ker = " + names_of(R, k.members()) + " but the ideal is " + names_of(R, i.members());
    if (!h.surjective()) c.detail += "; image misses " + h.target().name(*h.image_set().complement().first());
  }
  return c;
}

Ideal ideal_join(const AmalgamatedRing& m, const Ideal& a, const Budget& budget) {
  if (!(a.ring() == m.A())) throw InvalidArgument("ideal_join: the ideal must belong to A");
  const Ring& C = m.carrier();
  Subset s(C.size());
  for (Elem c = 0; c < C.size(); ++c)
    if (a.contains(m.pair_of[c].first)) s.insert(c);
  Ideal j = Ideal::from_members(C, s);
  enforce(j.size() == a.size() * m.b().size(), "|a ⋈ b| differs from |a||b|");
  auto qa = mk_quotient(m.A(), a, budget);
  auto qc = mk_quotient(C, j, budget);
  std::vector<Elem> map(qa.ring.size());
  for (Elem x = 0; x < m.A().size(); ++x) map[qa.projection(x)] = qc.projection(m.iota(x));
  RingHom h = mk_hom(qa.ring, qc.ring, std::move(map));
  enforce(h.bijective(), "A/a -> carrier/(a ⋈ b) is not an isomorphism for " + a.describe());
  return j;
}

bool QuotientIsoReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IsoCheck& c) { return c.ok; });
}

QuotientIsoReport quotient_isos_check(const AmalgamatedRing& m, const Budget& budget) {
  QuotientIsoReport r;
  const Ring& C = m.carrier();
  r.checks.push_back(check_induced_isomorphism("carrier/({0}×b) ≅ A", m.b0, m.pA, budget));

  std::vector<Elem> to_image;
  for (Elem c = 0; c < C.size(); ++c) to_image.push_back(m.image_B.local(m.pB(c)));
  RingHom pB_image = mk_hom(C, m.image_B.ring, std::move(to_image));
  r.checks.push_back(check_induced_isomorphism("carrier/(f^{-1}(b)×{0}) ≅ f(A)+b", kernel(m.pB), pB_image, budget));

  r.checks.push_back(check_induced_isomorphism("carrier/(f^{-1}(b)×b) ≅ (f(A)+b)/b", m.conductor, m.gamma, budget));

  auto qa = mk_quotient(m.A(), m.preimage_b, budget);
  r.checks.push_back(
      check_induced_isomorphism("carrier/(f^{-1}(b)×b) ≅ A/f^{-1}(b)", m.conductor, compose(qa.projection, m.pA), budget));

  if (m.spec.f.surjective()) {
    auto qb = mk_quotient(m.B(), m.b(), budget);
    r.checks.push_back(
        check_induced_isomorphism("carrier/(f^{-1}(b)×b) ≅ B/b", m.conductor, compose(qb.projection, m.pB), budget));
  }
  return r;
}

FiberProduct build_fiber_product(const RingHom& rho, const RingHom& sigma, const Budget& budget) {
  if (!(rho.target() == sigma.target())) throw InvalidArgument("fiber: the two maps must share a target");
  const Ring& A = rho.source();
  const Ring& B = sigma.source();
  FiberProduct fp{rho, sigma, mk_product(A, B, budget), {}, {}, {}, {}};
  Subset s(fp.ambient.ring.size());
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem y = 0; y < B.size(); ++y)
      if (rho(a) == sigma(y)) s.insert(fp.ambient.pair(a, y));
  fp.sub = mk_subring(fp.ambient.ring, s, expr::fiber(rho, sigma), Ring::Kind::Subring, {A, B}, budget);
  fp.pair_of = pairs_of(fp.sub, B.size());
  fp.pA = coordinate(fp.sub, fp.pair_of, A, true);
  fp.pB = coordinate(fp.sub, fp.pair_of, B, false);

  const Ring& D = fp.sub.ring;
  Subset ka(D.size()), kb(D.size());
  const Ideal ks = kernel(sigma), kr = kernel(rho);
  for (Elem c = 0; c < D.size(); ++c) {
    const auto [x, y] = fp.pair_of[c];
    if (x == A.zero() && ks.contains(y)) ka.insert(c);
    if (kr.contains(x) && y == B.zero()) kb.insert(c);
  }
  enforce(kernel(fp.pA).members() == ka, "Ker(pA) differs from {0} × Ker(sigma) in " + D.provenance());
  enforce(kernel(fp.pB).members() == kb, "Ker(pB) differs from Ker(rho) × {0} in " + D.provenance());
  return fp;
}

FiberIdentityCheck fiberproduct_identity_check(const AmalgamatedRing& m, const Budget& budget) {
  auto q = mk_quotient(m.B(), m.b(), budget);
  auto fp = build_fiber_product(compose(q.projection, m.spec.f), q.projection, budget);
  FiberIdentityCheck out;
  out.fiber_size = fp.carrier().size();
  out.amalg_size = m.carrier().size();
  const Subset a = m.sub.inclusion.image_set(), b = fp.sub.inclusion.image_set();
  out.equal = a == b;
  if (!out.equal) {
    const Elem e = *((a | b) & (a & b).complement()).first();
    out.witness = std::make_pair(static_cast<Elem>(e / m.B().size()), static_cast<Elem>(e % m.B().size()));
  }
  return out;
}

bool is_maximal_ideal(const Ideal& i) {
  if (i.is_unit()) return false;
  const Ring& r = i.ring();
  for (Elem x = 0; x < r.size(); ++x)
    if (!i.contains(x) && !ideal_sum(i, principal_ideal(r, x)).is_unit()) return false;
  return true;
}

Ideal prime_lift(const AmalgamatedRing& m, const Ideal& p) {
  if (!(p.ring() == m.A())) throw InvalidArgument("prime_lift: expected a prime of A");
  if (!prime_test(p).prime) throw InvalidArgument("prime_lift: " + p.describe() + " is not prime");
  const Ring& C = m.carrier();
  Subset s(C.size());
  for (Elem c = 0; c < C.size(); ++c)
    if (p.contains(m.pair_of[c].first)) s.insert(c);
  Ideal lift = Ideal::from_members(C, s);
  enforce(prime_test(lift).prime, "lift of " + p.describe() + " is not prime");
  enforce(is_maximal_ideal(lift) == is_maximal_ideal(p), "maximality does not transfer for the lift of " + p.describe());
  return lift;
}

Ideal prime_bar(const AmalgamatedRing& m, const Ideal& q) {
  if (!(q.ring() == m.B())) throw InvalidArgument("prime_bar: expected a prime of B");
  if (!prime_test(q).prime) throw InvalidArgument("prime_bar: " + q.describe() + " is not prime");
  if (m.b().subset_of(q)) throw InvalidArgument("prime_bar: " + q.describe() + " contains b");
  const Ring& C = m.carrier();
  Subset s(C.size());
  for (Elem c = 0; c < C.size(); ++c)
    if (q.contains(m.pair_of[c].second)) s.insert(c);
  Ideal bar = Ideal::from_members(C, s);
  enforce(prime_test(bar).prime, "bar of " + q.describe() + " is not prime");
  enforce(is_maximal_ideal(bar) == is_maximal_ideal(q), "maximality does not transfer for the bar of " + q.describe());
  return bar;
}

namespace {

bool order_preserved(const std::vector<TransferredPrime>& v) {
  for (const auto& x : v)
    for (const auto& y : v)
      if (x.source.subset_of(y.source) != x.image.subset_of(y.image)) return false;
  return true;
}

bool contains_ideal(const std::vector<Ideal>& v, const Ideal& i) { return std::find(v.begin(), v.end(), i) != v.end(); }

}  // namespace

SpectrumTransferReport spectrum_transfer(const AmalgamatedRing& m, const Budget& budget) {
  SpectrumTransferReport r;
  r.direct = spectrum(m.carrier(), budget);
  const auto sa = spectrum(m.A(), budget);
  const auto sb = spectrum(m.B(), budget);
  for (const auto& p : sa.primes) r.lifts.push_back({p, prime_lift(m, p), contains_ideal(sa.maximals, p)});
  for (const auto& q : sb.primes)
    if (!m.b().subset_of(q)) r.bars.push_back({q, prime_bar(m, q), contains_ideal(sb.maximals, q)});

  std::vector<Ideal> transferred;
  for (const auto& t : r.lifts) transferred.push_back(t.image);
  for (const auto& t : r.bars) transferred.push_back(t.image);
  auto sorted = [](std::vector<Ideal> v) {
    std::sort(v.begin(), v.end(), [](const Ideal& a, const Ideal& b) { return canonical_less(a.members(), b.members()); });
    return v;
  };
  const auto ts = sorted(transferred), ds = sorted(r.direct.primes);
  r.sets_equal = ts == ds;
  if (!r.sets_equal) {
    for (const auto& p : ds)
      if (!contains_ideal(ts, p)) r.problems.push_back("prime " + p.describe() + " is not produced by the transfer");
    for (const auto& p : ts)
      if (!contains_ideal(ds, p)) r.problems.push_back("transferred ideal " + p.describe() + " is not a prime");
    if (r.problems.empty()) r.problems.push_back("transfer produces a prime more than once");
  }

  std::vector<Ideal> lift_images;
  for (const auto& t : r.lifts) lift_images.push_back(t.image);
  r.lift_image_is_V_b0 = sorted(lift_images) == sorted(r.direct.V(m.b0));
  if (!r.lift_image_is_V_b0) r.problems.push_back("image of the lift map differs from V(b0)");
  r.lift_order_iso = order_preserved(r.lifts);
  if (!r.lift_order_iso) r.problems.push_back("lift map is not an order isomorphism onto its image");
  r.bar_order_iso = order_preserved(r.bars);
  if (!r.bar_order_iso) r.problems.push_back("bar map is not an order isomorphism onto its image");

  std::vector<Ideal> max_formula;
  for (const auto& t : r.lifts)
    if (t.maximal) {
      max_formula.push_back(t.image);
      ++r.max_from_lifts;
    }
  for (const auto& t : r.bars)
    if (t.maximal) {
      max_formula.push_back(t.image);
      ++r.max_from_bars;
    }
  r.max_formula = sorted(max_formula) == sorted(r.direct.maximals);
  if (!r.max_formula) r.problems.push_back("Max(carrier) differs from the lifted and barred maximals");
  return r;
}

LocalityCheck is_local_amalg(const AmalgamatedRing& m, const Budget& budget) {
  LocalityCheck c;
  c.direct = spectrum(m.carrier(), budget).is_local();
  c.criterion = spectrum(m.A(), budget).is_local() && m.b().subset_of(radicals(m.B(), budget).jacobson);
  return c;
}

LocalizedAmalgData localized_data(const AmalgamatedRing& m, const Ideal& p, const Budget& budget) {
  const Ring& A = m.A();
  const Ring& B = m.B();
  const RingHom& f = m.spec.f;
  if (!(p.ring() == A) || !prime_test(p).prime) throw InvalidArgument("localized_data: expected a prime of A");

  Subset sp(B.size());
  const auto bm = m.b().members().elements();
  p.members().complement().for_each([&](Elem s) {
    for (Elem beta : bm) sp.insert(B.add(f(s), beta));
  });
  MultiplicativeSet S(B, sp);
  LocalizedRing Ap = localize_at(p, budget);
  LocalizedRing Bs = localize(B, S, budget);

  std::string problem;
  auto fp_map = localized_map(Ap, [&](Elem a, Elem s) { return Bs.fraction(f(a), f(s)); }, problem);
  enforce(fp_map.has_value(), "f_p: " + problem);
  RingHom fp = mk_hom(Ap.carrier, Bs.carrier, std::move(*fp_map));
  Ideal bS = extension(Bs.canonical, m.b());

  const std::string at = " at " + p.describe() + " of " + m.carrier().provenance();
  enforce(preimage(fp, bS) == extension(Ap.canonical, m.preimage_b), "f_p^{-1}(b B_S) differs from f^{-1}(b) A_p" + at);
  const Subset outside = p.members().complement();
  for (const auto& d : all_ideals(B, budget)) {
    const bool unit = extension(Bs.canonical, d).is_unit();
    const bool meets = preimage(f, ideal_sum(m.b(), d)).members().intersects(outside);
    enforce(unit == meets, "d B_S = B_S criterion fails for d = " + d.describe() + at);
  }
  const bool zero = Bs.carrier.is_zero_ring();
  enforce(zero == m.preimage_b.members().intersects(outside), "B_S = 0 criterion fails" + at);

  LocalizedAmalgData out{p, S, Ap, Bs, fp, bS, zero, false, false, false};
  out.f_p_surjective = fp.surjective();
  out.b_Sp_zero = bS.is_zero();
  out.preimage_local_zero = extension(Ap.canonical, m.preimage_b).is_zero();
  return out;
}

LocalizationIsoReport localize_amalg_at_prime(const AmalgamatedRing& m, const Ideal& P, const Budget& budget) {
  const Ring& C = m.carrier();
  if (!(P.ring() == C) || !prime_test(P).prime) throw InvalidArgument("localize_amalg_at_prime: expected a prime of the carrier");
  LocalizationIsoReport r;
  r.prime = P;
  LocalizedRing CP = localize_at(P, budget);
  std::string problem;

  if (m.b0.subset_of(P)) {
    r.branch = "lift";
    Subset ps(m.A().size());
    P.members().for_each([&](Elem c) { ps.insert(m.pair_of[c].first); });
    r.source = Ideal::from_members(m.A(), ps);
    enforce(prime_lift(m, r.source) == P, "prime " + P.describe() + " contains b0 but is not a lift");
    auto data = localized_data(m, r.source, budget);
    auto local = build_amalgamation(data.f_p, data.b_Sp, budget);
    auto map = localized_map(
        CP,
        [&](Elem x, Elem t) {
          const auto [a, y] = m.pair_of[x];
          const auto [s, u] = m.pair_of[t];
          return local.element(data.A_p.fraction(a, s), data.B_Sp.fraction(y, u));
        },
        problem);
    r.iso = iso_from_map("carrier_P ≅ A_p ⋈ b_Sp", CP.carrier, local.carrier(), std::move(map), problem, budget);
    r.zero_branch = data.B_Sp_zero;
    if (!m.preimage_b.subset_of(r.source)) {
      enforce(data.B_Sp_zero, "B_Sp is not zero although p does not contain f^{-1}(b)");
      problem.clear();
      auto deg = localized_map(
          CP, [&](Elem x, Elem t) { return data.A_p.fraction(m.pair_of[x].first, m.pair_of[t].first); }, problem);
      r.degenerate = iso_from_map("carrier_P ≅ A_p", CP.carrier, data.A_p.carrier, std::move(deg), problem, budget);
    }
  } else {
    r.branch = "bar";
    const auto sb = spectrum(m.B(), budget);
    for (const auto& q : sb.primes)
      if (!m.b().subset_of(q) && prime_bar(m, q) == P) r.source = q;
    enforce(r.source.ring().valid(), "prime " + P.describe() + " avoids b0 but is not a bar");
    LocalizedRing Bq = localize_at(r.source, budget);
    auto map = localized_map(
        CP, [&](Elem x, Elem t) { return Bq.fraction(m.pair_of[x].second, m.pair_of[t].second); }, problem);
    r.iso = iso_from_map("carrier_P ≅ B_q", CP.carrier, Bq.carrier, std::move(map), problem, budget);
  }
  return r;
}

std::vector<LocalizationIsoReport> localize_amalg_everywhere(const AmalgamatedRing& m, const Budget& budget) {
  std::vector<LocalizationIsoReport> out;
  for (const auto& P : spectrum(m.carrier(), budget).primes) out.push_back(localize_amalg_at_prime(m, P, budget));
  return out;
}

}  // namespace amalgam
