#include "amalgam/theorems.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>

#include "amalgam/kernels.hpp"

namespace amalgam {

Catalog catalog_from_text(std::string text, std::string version) {
  Catalog c;
  c.version = std::move(version);
  c.text = std::move(text);
  return c;
}

std::vector<std::pair<std::string, Ring>> BuiltCatalog::rings() const {
  std::vector<std::pair<std::string, Ring>> out;
  for (const auto& d : spec.defs)
    if (d.value.kind != SpecValue::Kind::Ideal && d.value.kind != SpecValue::Kind::Hom) out.emplace_back(d.name, d.value.ring);
  for (const auto& r : raw_rings) out.push_back(r);
  return out;
}

std::vector<std::pair<std::string, std::shared_ptr<const AmalgamatedRing>>> BuiltCatalog::amalgamations() const {
  std::vector<std::pair<std::string, std::shared_ptr<const AmalgamatedRing>>> out;
  for (const auto& d : spec.defs)
    if (d.value.kind == SpecValue::Kind::Amalgamation) out.emplace_back(d.name, d.value.amalg);
  return out;
}

std::vector<std::pair<std::string, std::shared_ptr<const FiberProduct>>> BuiltCatalog::fiber_products() const {
  std::vector<std::pair<std::string, std::shared_ptr<const FiberProduct>>> out;
  for (const auto& d : spec.defs)
    if (d.value.kind == SpecValue::Kind::FiberProduct) out.emplace_back(d.name, d.value.fiber);
  return out;
}

std::vector<std::pair<std::string, RingHom>> BuiltCatalog::homs() const {
  std::vector<std::pair<std::string, RingHom>> out;
  for (const auto& d : spec.defs) {
    switch (d.value.kind) {
      case SpecValue::Kind::Hom:
        out.emplace_back(d.name, *d.value.hom);
        break;
      case SpecValue::Kind::Amalgamation:
        out.emplace_back(d.name + ".f", d.value.amalg->spec.f);
        out.emplace_back(d.name + ".pA", d.value.amalg->pA);
        out.emplace_back(d.name + ".pB", d.value.amalg->pB);
        break;
      case SpecValue::Kind::FiberProduct:
        out.emplace_back(d.name + ".rho", d.value.fiber->rho);
        out.emplace_back(d.name + ".sigma", d.value.fiber->sigma);
        break;
      default:
        break;
    }
  }
  return out;
}

BuiltCatalog build_catalog(const Catalog& c, const Budget& budget) {
  BuiltCatalog b;
  b.spec = parse_spec(c.text, budget);
  b.errors = b.spec.errors;
  for (const auto& raw : c.raw) {
    try {
      if (b.spec.find(raw.id)) throw InvalidArgument("name already defined");
      Ring r = make_ring(raw.tables, raw.names, "(raw " + raw.id + ")", Ring::Kind::Raw, {}, {}, budget);
      b.raw_rings.emplace_back(raw.id, std::move(r));
    } catch (const Error& e) {
      SpecError err{SpecError::Kind::Build, 0, 0, e.what(), raw.id};
      if (dynamic_cast<const BudgetExceeded*>(&e)) err.kind = SpecError::Kind::Budget;
      if (dynamic_cast<const InvalidArgument*>(&e)) err.kind = SpecError::Kind::Duplicate;
      b.errors.push_back(std::move(err));
    }
  }
  return b;
}

const ClassificationReport* ClassificationTable::find(const std::string& id) const {
  auto it = reports.find(id);
  return it == reports.end() ? nullptr : &it->second;
}

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

// Catalog classifications by provenance, with on-demand classification for
// rings that are not catalog entries.
class Classifications {
 public:
  explicit Classifications(const TheoremContext& ctx) : ctx_(ctx) {
    for (const auto& [id, rep] : ctx.table.reports) by_prov_.emplace(rep.ring, &rep);
  }

  const ClassificationReport& of(const Ring& r) {
    auto it = by_prov_.find(r.provenance());
    if (it != by_prov_.end()) return *it->second;
    auto e = extra_.find(r.provenance());
    if (e == extra_.end()) e = extra_.emplace(r.provenance(), classify(r, ctx_.options)).first;
    return e->second;
  }

 private:
  const TheoremContext& ctx_;
  std::map<std::string, const ClassificationReport*> by_prov_;
  std::map<std::string, ClassificationReport> extra_;
};

bool is_field(const Ring& r) { return !r.is_zero_ring() && regularity_scan(r).units.count() + 1 == r.size(); }
bool is_chain(const Ring& r, const Budget& b) { return ideals_totally_ordered(r, b).chain; }

// Local data of an amalgamation shared by the descent-type checks.
struct AmalgLocal {
  std::vector<LocalizedAmalgData> at_A;  // m in Max(A) ∩ V(f^{-1}(b))
  std::vector<Ideal> max_B_outside;      // n in Max(B) \ V(b)
  std::vector<LocalizedRing> B_n;

  bool b_local_zero() const {
    return std::all_of(at_A.begin(), at_A.end(), [](const auto& d) { return d.b_Sp_zero; });
  }
  // f_m onto or f^{-1}(b) A_m != 0 at every such m
  bool side_hypothesis() const {
    return std::all_of(at_A.begin(), at_A.end(), [](const auto& d) { return d.f_p_surjective || !d.preimage_local_zero; });
  }
  template <class P>
  bool all_B_n(P&& pred) const {
    return std::all_of(B_n.begin(), B_n.end(), [&](const LocalizedRing& l) { return pred(l.carrier); });
  }
};

AmalgLocal amalg_local(const AmalgamatedRing& m, const Budget& budget) {
  AmalgLocal out;
  for (const auto& mx : spectrum(m.A(), budget).maximals)
    if (m.preimage_b.subset_of(mx)) out.at_A.push_back(localized_data(m, mx, budget));
  for (const auto& n : spectrum(m.B(), budget).maximals)
    if (!m.b().subset_of(n)) {
      out.max_B_outside.push_back(n);
      out.B_n.push_back(localize_at(n, budget));
    }
  return out;
}

std::string ideal_list(const std::vector<Ideal>& v) {
  std::string s;
  for (const auto& i : v) s += (s.empty() ? "" : " ") + i.describe();
  return s.empty() ? "none" : s;
}

void finalize(TheoremCheckResult& t) {
  t.instances = t.results.size();
  for (const auto& r : t.results) {
    if (r.hypothesis) ++t.hypothesis_satisfied;
    if (r.hypothesis && r.degenerate) ++t.degenerate;
    if (r.negative_control) ++t.negative_controls;
    if (r.failed) t.failures.push_back(r.entry + (r.part.empty() ? "" : " [" + r.part + "]") + ": " + r.detail);
  }
  if (t.instances > 0 && t.hypothesis_satisfied == 0) t.flags.push_back("hypothesis never satisfied in this catalog");
  if (t.hypothesis_satisfied > 0 && t.degenerate == t.hypothesis_satisfied)
    t.flags.push_back("hypothesis holds only degenerately on finite carriers");
}

// Runs `body` and turns an exception into a failed instance.
void guarded(TheoremCheckResult& t, InstanceResult r, const std::function<void(InstanceResult&)>& body) {
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failed = true;
    r.detail = std::string("error: ") + e.what();
  }
  t.results.push_back(std::move(r));
}

InstanceResult instance(std::string entry, std::string part = {}) {
  InstanceResult r;
  r.entry = std::move(entry);
  r.part = std::move(part);
  return r;
}

void require(InstanceResult& r, bool cond, const std::string& what) {
  if (!cond && !r.failed) {
    r.failed = true;
    r.detail = what;
  }
}

}  // namespace

TheoremCheckResult check_hierarchy(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "hierarchy";
  const ClassificationReport* strict[3] = {nullptr, nullptr, nullptr};
  std::string strict_ids[3];
  for (const auto& id : ctx.table.order) {
    const auto* rep = ctx.table.find(id);
    if (!rep) continue;
    guarded(t, instance(id), [&](InstanceResult& r) {
      auto v = [&](const char* n) { return rep->verdict(n); };
      r.hypothesis = true;
      const bool p1 = v("P1_semihereditary"), p2 = v("P2_wgd_le_1"), p3 = v("P3_arithmetical"), p4 = v("P4_gauss"),
                 p5 = v("P5_prufer"), loc = v("locally_prufer"), tot = v("total_ring_of_fractions");
      require(r, (!p1 || p2) && (!p2 || p3) && (!p3 || p4) && (!p4 || p5), "P1 => P2 => P3 => P4 => P5 violated");
      require(r, (!p4 || loc) && (!loc || p5), "P4 => locally Prufer => P5 violated");
      require(r, p1 == p2, "P1 and P2 differ on a finite ring");
      const auto& pr = rep->prufer;
      require(r, pr.invertibility && pr.distributive && pr.rtop, "Prufer variants not all true");
      require(r, p5 && loc && tot, "finite ring not Prufer, locally Prufer and total");
      r.conclusion = !r.failed;
      r.facts = {{"P1", yes(p1)}, {"P3", yes(p3)}, {"P4", yes(p4)}, {"locally_prufer", yes(loc)}};
      if (!strict[0] && p3 && !p2) strict[0] = rep, strict_ids[0] = id;
      if (!strict[1] && p4 && !p3) strict[1] = rep, strict_ids[1] = id;
      if (!strict[2] && loc && !p4) strict[2] = rep, strict_ids[2] = id;
    });
  }
  const char* names[3] = {"P3 and not P2", "P4 and not P3", "locally Prufer and not P4"};
  for (int k = 0; k < 3; ++k)
    t.flags.push_back(std::string("strict witness ") + names[k] + ": " + (strict[k] ? strict_ids[k] : "not in this catalog"));
  finalize(t);
  return t;
}

TheoremCheckResult check_products(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "products";
  Classifications cls(ctx);
  for (const auto& [id, ring] : ctx.catalog.rings()) {
    if (ring.kind() != Ring::Kind::Product) continue;
    guarded(t, instance(id), [&](InstanceResult& r) {
      r.hypothesis = true;
      auto pc = product_consistency_check(cls.of(ring), cls.of(ring.operands()[0]), cls.of(ring.operands()[1]));
      r.conclusion = pc.consistent;
      std::string mm;
      for (const auto& m : pc.mismatches) mm += (mm.empty() ? "" : "; ") + m;
      require(r, pc.consistent, "verdicts are not the conjunction of the factors: " + mm);
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_gauss_locality(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "gauss_locality";
  for (const auto& [id, ring] : ctx.catalog.rings()) {
    const auto* rep = ctx.table.find(id);
    if (!rep || ring.is_zero_ring()) continue;
    guarded(t, instance(id), [&](InstanceResult& r) {
      r.hypothesis = true;
      const bool g = rep->verdict("P4_gauss");
      const auto lp = local_picture(ring, ctx.options.budget);
      bool all = true;
      for (std::size_t k = 0; k < lp.locals.size(); ++k) {
        const bool lg = gauss_criterion(lp.locals[k].carrier, ctx.options.budget).value;
        all = all && lg;
        if (g) require(r, lg, "localization at " + lp.maximals[k].describe() + " is not Gauss");
      }
      r.conclusion = g == all;
      require(r, g == all, "Gauss verdict differs from the conjunction over maximal ideals");
      r.facts = {{"gauss", yes(g)}, {"maximals", std::to_string(lp.maximals.size())}};
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_quotient_isos(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "quotient_isos";
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      r.hypothesis = true;
      auto q = quotient_isos_check(*m, ctx.options.budget);
      r.conclusion = q.ok();
      for (const auto& c : q.checks) {
        r.facts.emplace_back(c.claim, c.path + (c.ok ? "" : " FAILED"));
        require(r, c.ok, c.claim + ": " + c.detail);
      }
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_fiber_identity(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "fiber_identity";
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      r.hypothesis = true;
      auto f = fiberproduct_identity_check(*m, ctx.options.budget);
      r.conclusion = f.equal;
      r.facts = {{"fiber_size", std::to_string(f.fiber_size)}, {"amalgamation_size", std::to_string(f.amalg_size)}};
      std::string w;
      if (f.witness) w = " at (" + m->A().name(f.witness->first) + ", " + m->B().name(f.witness->second) + ")";
      require(r, f.equal, "carriers differ" + w);
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_spectrum_transfer(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "spectrum_transfer";
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      r.hypothesis = true;
      auto s = spectrum_transfer(*m, ctx.options.budget);
      r.conclusion = s.ok();
      r.facts = {{"primes", std::to_string(s.direct.primes.size())},
                 {"maximals", std::to_string(s.direct.maximals.size())},
                 {"max_from_lifts", std::to_string(s.max_from_lifts)},
                 {"max_from_bars", std::to_string(s.max_from_bars)},
                 {"sets_equal", yes(s.sets_equal)},
                 {"order_iso", yes(s.lift_order_iso && s.bar_order_iso)}};
      std::string p;
      for (const auto& x : s.problems) p += (p.empty() ? "" : "; ") + x;
      require(r, s.ok(), p);
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_localization(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "localization";
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    std::vector<LocalizationIsoReport> reps;
    try {
      reps = localize_amalg_everywhere(*m, ctx.options.budget);
    } catch (const std::exception& e) {
      auto r = instance(id);
      r.failed = true;
      r.detail = std::string("error: ") + e.what();
      t.results.push_back(std::move(r));
      continue;
    }
    for (const auto& rep : reps) {
      auto r = instance(id, rep.prime.describe());
      r.hypothesis = true;
      r.conclusion = rep.ok();
      r.facts = {{"branch", rep.branch}, {"source", rep.source.describe()}, {"path", rep.iso.path},
                 {"zero_branch", yes(rep.zero_branch)}};
      require(r, rep.iso.ok, rep.iso.claim + ": " + rep.iso.detail);
      if (rep.degenerate) require(r, rep.degenerate->ok, rep.degenerate->claim + ": " + rep.degenerate->detail);
      t.results.push_back(std::move(r));
    }
  }
  finalize(t);
  const auto zero = std::count_if(t.results.begin(), t.results.end(), [](const InstanceResult& r) {
    return std::find(r.facts.begin(), r.facts.end(), std::pair<std::string, std::string>{"zero_branch", "true"}) != r.facts.end();
  });
  t.flags.push_back("zero-ring branch instances: " + std::to_string(zero));
  return t;
}

TheoremCheckResult check_regular_conductor(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "regular_conductor";
  Classifications cls(ctx);
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      const bool ra = is_regular_ideal(m->A(), m->preimage_b).regular;
      const bool rb = is_regular_ideal(m->B(), m->b()).regular;
      r.facts = {{"preimage_regular", yes(ra)}, {"b_regular", yes(rb)}};
      r.hypothesis = ra && rb;
      if (!r.hypothesis) {
        r.detail = "conductor not regular";
        return;
      }
      r.degenerate = true;
      r.detail = "hypothesis forces f^{-1}(b) = A and b = B on finite carriers";
      const bool whole = m->carrier().size() == m->ambient.ring.size();
      require(r, whole, "b = B but the carrier is not A x B");
      auto pc = product_consistency_check(cls.of(m->carrier()), cls.of(m->A()), cls.of(m->B()));
      std::string mm;
      for (const auto& x : pc.mismatches) mm += (mm.empty() ? "" : "; ") + x;
      require(r, pc.consistent, "biconditional violated: " + mm);
      r.conclusion = whole && pc.consistent;
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_gauss_retract(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "gauss_retract";
  Classifications cls(ctx);
  const unsigned d = ctx.options.degree;
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id, "retract"), [&](InstanceResult& r) {
      const Ring& C = m->carrier();
      const Ring& A = m->A();
      const double n = static_cast<double>(C.size());
      unsigned dd = d;
      while (dd > 0 && std::pow(n, 2.0 * (dd + 1)) > static_cast<double>(ctx.options.budget.gauss_pairs)) --dd;
      r.facts.emplace_back("degree", std::to_string(dd));
      if (dd == 0) {
        r.detail = "carrier too large for the bounded oracle";
        return;
      }
      IdealLattice lc(C, ctx.options.budget), la(A, ctx.options.budget);
      const auto tc = lc.content_tables(), ta = la.content_tables();
      const std::size_t len = dd + 1;
      std::size_t total_c = 1, total_a = 1;
      for (std::size_t k = 0; k < len; ++k) total_c *= C.size(), total_a *= A.size();
      std::vector<signed char> a_gauss(total_a, -1);
      std::vector<Elem> pc(len), pa(len);
      std::size_t certified = 0;
      for (std::size_t code = 0; code < total_c && !r.failed; ++code) {
        std::size_t c = code;
        for (std::size_t k = 0; k < len; ++k) pc[k] = static_cast<Elem>(c % C.size()), c /= C.size();
        if (kernels::gauss_polynomial_parallel(tc, pc, dd).failure) continue;
        ++certified;
        std::size_t acode = 0;
        for (std::size_t k = len; k-- > 0;) {
          pa[k] = m->pA(pc[k]);
          acode = acode * A.size() + pa[k];
        }
        if (a_gauss[acode] < 0) a_gauss[acode] = kernels::gauss_polynomial_parallel(ta, pa, dd).failure ? 0 : 1;
        require(r, a_gauss[acode] == 1,
                "p = " + PolyOverRing(C, pc).to_string("T") + " is Gauss over the carrier but r(p) = " +
                    PolyOverRing(A, pa).to_string("T") + " is not Gauss over A");
      }
      r.hypothesis = certified > 0;
      r.conclusion = !r.failed;
      r.facts.emplace_back("certified", std::to_string(certified));
      r.facts.emplace_back("polynomials", std::to_string(total_c));
    });
    guarded(t, instance(id, "gauss"), [&](InstanceResult& r) {
      const bool c = cls.of(m->carrier()).verdict("P4_gauss"), a = cls.of(m->A()).verdict("P4_gauss");
      r.hypothesis = c;
      r.facts = {{"carrier", yes(c)}, {"A", yes(a)}};
      if (c) {
        r.conclusion = a;
        require(r, a, "carrier Gauss but A not Gauss");
      }
    });
    guarded(t, instance(id, "arithmetical"), [&](InstanceResult& r) {
      const bool c = cls.of(m->carrier()).verdict("P3_arithmetical"), a = cls.of(m->A()).verdict("P3_arithmetical");
      r.hypothesis = c;
      r.facts = {{"carrier", yes(c)}, {"A", yes(a)}};
      if (c) {
        r.conclusion = a;
        require(r, a, "carrier arithmetical but A not arithmetical");
      }
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_prufer_descent(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "prufer_descent";
  Classifications cls(ctx);
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      const auto ra = regularity_scan(m->A()), rb = regularity_scan(m->B());
      bool maps = true;
      for (Elem a = 0; a < m->A().size(); ++a)
        if (ra.regular.contains(a) && !rb.regular.contains(m->spec.f(a))) maps = false;
      r.hypothesis = maps;
      r.facts = {{"f_maps_regular_to_regular", yes(maps)}};
      if (!maps) return;
      const bool c = cls.of(m->carrier()).verdict("P5_prufer"), a = cls.of(m->A()).verdict("P5_prufer");
      r.facts.emplace_back("carrier_prufer", yes(c));
      r.facts.emplace_back("A_prufer", yes(a));
      r.conclusion = !c || a;
      require(r, !c || a, "carrier Prufer but A not Prufer");
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_im_reg(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "im_reg";
  for (const auto& [id, h] : ctx.catalog.homs()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      const bool onto = h.surjective();
      const bool reg = is_regular_ideal(h.source(), kernel(h)).regular;
      r.facts = {{"surjective", yes(onto)}, {"kernel_regular", yes(reg)}};
      r.hypothesis = onto && reg;
      if (!r.hypothesis) return;
      r.degenerate = true;
      r.detail = "regular kernel forces kernel = A and a zero target on finite carriers";
      IdealLattice l(h.target(), ctx.options.budget);
      auto c = kernels::census_parallel(l.ops(), false);
      r.conclusion = c.product_violations == 0;
      r.facts.emplace_back("triples", std::to_string(c.triples));
      require(r, c.product_violations == 0, "a(b n c) != ab n ac on the target");
    });
  }
  for (const auto& [id, ring] : ctx.catalog.rings()) {
    const auto* rep = ctx.table.find(id);
    if (!rep) continue;
    guarded(t, instance(id, "census"), [&](InstanceResult& r) {
      IdealLattice l(ring, ctx.options.budget);
      auto c = kernels::census_parallel(l.ops(), false);
      const bool arith = rep->verdict("P3_arithmetical");
      r.conclusion = c.product_violations == 0;
      r.facts = {{"ideals", std::to_string(l.count())},
                 {"triples", std::to_string(c.triples)},
                 {"product_violations", std::to_string(c.product_violations)},
                 {"lattice_violations", std::to_string(c.lattice_violations)},
                 {"arithmetical", yes(arith)}};
      auto triple = [&](const std::array<int, 3>& w) {
        return l.ideals()[w[0]].describe() + ", " + l.ideals()[w[1]].describe() + ", " + l.ideals()[w[2]].describe();
      };
      if (c.product_witness) r.facts.emplace_back("product_witness", triple(*c.product_witness));
      if (c.lattice_witness) r.facts.emplace_back("lattice_witness", triple(*c.lattice_witness));
      require(r, (c.lattice_violations == 0) == arith, "distributive ideal lattice disagrees with the arithmetical verdict");
      require(r, !arith || c.product_violations == 0, "arithmetical ring violates a(b n c) = ab n ac");
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_total_sufficiency(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "total_sufficiency";
  Classifications cls(ctx);
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      const bool a_total = cls.of(m->A()).verdict("total_ring_of_fractions");
      const bool in_jac = m->b().subset_of(radicals(m->B(), ctx.options.budget).jacobson);
      const Subset fA = m->spec.f.image_set();
      const bool in_image = m->b().members().subset_of(fA);
      const auto ra = regularity_scan(m->A());
      bool torsion = true;
      for (Elem beta = 0; beta < m->B().size() && torsion; ++beta) {
        if (!m->b().contains(beta)) continue;
        bool killed = false;
        for (Elem x = 0; x < m->A().size() && !killed; ++x)
          killed = ra.regular.contains(x) && m->B().mul(m->spec.f(x), beta) == m->B().zero();
        torsion = killed;
      }
      const bool c = cls.of(m->carrier()).verdict("total_ring_of_fractions");
      r.hypothesis = a_total && in_jac && (in_image || torsion);
      r.facts = {{"A_total", yes(a_total)}, {"b_in_jacobson", yes(in_jac)}, {"b_in_image", yes(in_image)},
                 {"b_torsion", yes(torsion)}, {"carrier_total", yes(c)}};
      if (!r.hypothesis) {
        r.detail = "hypotheses fail; carrier total: " + yes(c);
        return;
      }
      r.conclusion = c;
      require(r, c, "carrier is not a total ring of fractions");
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_bS0(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "bS0";
  Classifications cls(ctx);
  const auto& b = ctx.options.budget;
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      const auto loc = amalg_local(*m, b);
      r.hypothesis = loc.b_local_zero();
      const auto& cc = cls.of(m->carrier());
      const auto& ca = cls.of(m->A());
      const bool c_loc = cc.verdict("locally_prufer"), c_gauss = cc.verdict("P4_gauss");
      std::vector<Ideal> primes;
      for (const auto& d : loc.at_A) primes.push_back(d.p);
      r.facts = {{"maximals_over_preimage", ideal_list(primes)},
                 {"maximals_of_B_outside_b", ideal_list(loc.max_B_outside)},
                 {"carrier_locally_prufer", yes(c_loc)},
                 {"carrier_gauss", yes(c_gauss)}};
      if (!r.hypothesis) {
        r.negative_control = c_gauss;
        r.detail = "b_{S_m} != 0 at some maximal ideal";
        if (c_gauss) r.detail += "; carrier is Gauss all the same";
        return;
      }
      const bool p1 = ca.verdict("locally_prufer") && loc.all_B_n([&](const Ring& x) { return is_prufer(x, b).verdict.value; });
      const bool p2 = ca.verdict("P4_gauss") && loc.all_B_n([&](const Ring& x) { return gauss_criterion(x, b).value; });
      r.facts.emplace_back("premise_locally_prufer", yes(p1));
      r.facts.emplace_back("premise_gauss", yes(p2));
      require(r, !p1 || c_loc, "(1) violated: carrier not locally Prufer");
      require(r, !p2 || c_gauss, "(2) violated: carrier not Gauss");
      r.conclusion = (!p1 || c_loc) && (!p2 || c_gauss);
    });
  }
  finalize(t);
  return t;
}

TheoremCheckResult check_valfib(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "valfib";
  const auto& b = ctx.options.budget;
  auto run = [&](const std::string& id, const std::string& part, const FiberProduct& f) {
    guarded(t, instance(id, part), [&](InstanceResult& r) {
      r.hypothesis = true;
      const bool lhs = is_chain(f.carrier(), b);
      const bool ri = f.rho.injective(), si = f.sigma.injective();
      const bool rhs = (ri && is_chain(image_subring(f.pB, b).ring, b)) || (si && is_chain(image_subring(f.pA, b).ring, b));
      r.conclusion = lhs == rhs;
      r.facts = {{"chain", yes(lhs)}, {"rho_injective", yes(ri)}, {"sigma_injective", yes(si)}, {"criterion", yes(rhs)}};
      require(r, lhs == rhs, "chain property and projection criterion differ");
    });
  };
  for (const auto& [id, f] : ctx.catalog.fiber_products()) run(id, "", *f);
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    try {
      auto q = mk_quotient(m->B(), m->b(), b);
      auto rho = compose(q.projection, m->spec.f);
      run(id, "as fiber product", build_fiber_product(rho, q.projection, b));
    } catch (const std::exception& e) {
      auto r = instance(id, "as fiber product");
      r.failed = true;
      r.detail = std::string("error: ") + e.what();
      t.results.push_back(std::move(r));
    }
  }
  finalize(t);
  return t;
}

namespace {

enum class SurKind { Arithmetical, Wgd, Semihereditary };

TheoremCheckResult check_sur(const TheoremContext& ctx, SurKind kind) {
  const char* name = kind == SurKind::Arithmetical ? "arithm_sur" : kind == SurKind::Wgd ? "wgldim_sur" : "semih_sur";
  const char* verdict = kind == SurKind::Arithmetical ? "P3_arithmetical"
                        : kind == SurKind::Wgd        ? "P2_wgd_le_1"
                                                      : "P1_semihereditary";
  TheoremCheckResult t;
  t.theorem = name;
  Classifications cls(ctx);
  const auto& b = ctx.options.budget;
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      const auto loc = amalg_local(*m, b);
      const bool side = loc.side_hypothesis();
      bool coherent = true;
      if (kind == SurKind::Semihereditary) {
        const auto gens = module_generators(*m);
        std::vector<Elem> seeds{m->B().zero()};
        for (Elem a = 0; a < m->A().size(); ++a)
          for (Elem g : gens) seeds.push_back(m->B().mul(m->spec.f(a), g));
        coherent = additive_closure(m->B(), Subset::of(m->B().size(), seeds)) == m->b().members();
      }
      const bool lhs = cls.of(m->carrier()).verdict(verdict);
      const bool a_ok = cls.of(m->A()).verdict(verdict);
      const bool bz = loc.b_local_zero();
      const bool bn = kind == SurKind::Arithmetical ? loc.all_B_n([&](const Ring& x) { return is_chain(x, b); })
                                                    : loc.all_B_n([&](const Ring& x) { return is_field(x); });
      const bool rhs = a_ok && bz && bn;
      r.hypothesis = side && coherent;
      r.facts = {{"side_hypothesis", yes(side)},
                 {"carrier", yes(lhs)},
                 {"A", yes(a_ok)},
                 {"b_local_zero", yes(bz)},
                 {kind == SurKind::Arithmetical ? "B_n_chain" : "B_n_valuation_domain", yes(bn)}};
      if (kind == SurKind::Semihereditary) {
        r.facts.emplace_back("b_coherent", yes(coherent));
        require(r, !rhs || lhs, "sufficiency violated: conditions hold but the carrier is not semihereditary");
      }
      if (!r.hypothesis) {
        r.negative_control = lhs != rhs;
        r.detail = "side hypothesis fails";
        if (lhs != rhs) r.detail += "; carrier " + yes(lhs) + " while the criterion gives " + yes(rhs);
        return;
      }
      r.conclusion = lhs == rhs;
      require(r, lhs == rhs, "biconditional violated: carrier " + yes(lhs) + ", criterion " + yes(rhs));
    });
  }
  finalize(t);
  return t;
}

}  // namespace

TheoremCheckResult check_arithm_sur(const TheoremContext& ctx) { return check_sur(ctx, SurKind::Arithmetical); }
TheoremCheckResult check_wgldim_sur(const TheoremContext& ctx) { return check_sur(ctx, SurKind::Wgd); }
TheoremCheckResult check_semih_sur(const TheoremContext& ctx) { return check_sur(ctx, SurKind::Semihereditary); }

std::vector<Elem> module_generators(const AmalgamatedRing& m) {
  const Ring& B = m.B();
  std::vector<Elem> gens;
  Subset span(B.size());
  span.insert(B.zero());
  for (Elem beta = 0; beta < B.size(); ++beta) {
    if (!m.b().contains(beta) || span.contains(beta)) continue;
    gens.push_back(beta);
    for (Elem a = 0; a < m.A().size(); ++a) span.insert(B.mul(m.spec.f(a), beta));
    span = additive_closure(B, span);
  }
  return gens;
}

Subset iota_module_span(const AmalgamatedRing& m, const std::vector<Elem>& gens) {
  const Ring& C = m.carrier();
  Subset seeds(C.size());
  seeds.insert(C.zero());
  for (Elem a = 0; a < m.A().size(); ++a)
    for (Elem g : gens) seeds.insert(C.mul(m.iota(a), g));
  return additive_closure(C, seeds);
}

TheoremCheckResult check_finite_embedding(const TheoremContext& ctx) {
  TheoremCheckResult t;
  t.theorem = "finite_embedding";
  for (const auto& [id, m] : ctx.catalog.amalgamations()) {
    guarded(t, instance(id), [&](InstanceResult& r) {
      r.hypothesis = true;
      const auto bg = module_generators(*m);
      std::vector<Elem> gens{m->carrier().one()};
      std::string names = m->carrier().name(m->carrier().one());
      for (Elem beta : bg) {
        gens.push_back(m->element(m->A().zero(), beta));
        names += " " + m->carrier().name(gens.back());
      }
      const auto span = iota_module_span(*m, gens);
      r.conclusion = span.count() == m->carrier().size();
      r.facts = {{"generators", names}, {"span", std::to_string(span.count())}, {"carrier", std::to_string(m->carrier().size())}};
      require(r, *r.conclusion, "generators span only " + std::to_string(span.count()) + " elements");
    });
    auto r = instance(id, "coherence");
    r.hypothesis = true;
    r.degenerate = true;
    r.conclusion = true;
    r.detail = "finite carriers are Noetherian, hence coherent";
    t.results.push_back(std::move(r));
  }
  finalize(t);
  return t;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "hierarchy",        "products",          "gauss_locality", "quotient_isos", "fiber_identity", "spectrum_transfer",
      "localization",     "regular_conductor", "gauss_retract",  "prufer_descent", "im_reg",        "total_sufficiency",
      "bS0",              "valfib",            "arithm_sur",     "wgldim_sur",     "semih_sur",     "finite_embedding"};
  return ids;
}

TheoremCheckResult run_theorem(const std::string& id, const TheoremContext& ctx) {
  static const std::map<std::string, TheoremCheck> table{
      {"hierarchy", check_hierarchy},
      {"products", check_products},
      {"gauss_locality", check_gauss_locality},
      {"quotient_isos", check_quotient_isos},
      {"fiber_identity", check_fiber_identity},
      {"spectrum_transfer", check_spectrum_transfer},
      {"localization", check_localization},
      {"regular_conductor", check_regular_conductor},
      {"gauss_retract", check_gauss_retract},
      {"prufer_descent", check_prufer_descent},
      {"im_reg", check_im_reg},
      {"total_sufficiency", check_total_sufficiency},
      {"bS0", check_bS0},
      {"valfib", check_valfib},
      {"arithm_sur", check_arithm_sur},
      {"wgldim_sur", check_wgldim_sur},
      {"semih_sur", check_semih_sur},
      {"finite_embedding", check_finite_embedding},
  };
  auto it = table.find(id);
  if (it == table.end()) throw InvalidArgument("unknown theorem '" + id + "'");
  return it->second(ctx);
}

std::size_t CatalogRun::failure_count() const {
  std::size_t n = built.errors.size() + table.errors.size();
  for (const auto& e : expectations)
    if (!e.ok()) ++n;
  for (const auto& t : theorems) n += t.failures.size();
  return n;
}

bool CatalogRun::syntax_errors() const {
  return std::any_of(built.errors.begin(), built.errors.end(), [](const SpecError& e) { return e.syntax_level(); });
}

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  const int inner = std::max(1, omp_get_num_procs() / workers);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      omp_set_num_threads(inner);
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

CatalogRun run_catalog(const Catalog& c, const RunConfig& config) {
  for (const auto& id : config.theorems)
    if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
      throw InvalidArgument("unknown theorem '" + id + "'");

  CatalogRun run;
  run.catalog_version = c.version;
  run.built = build_catalog(c, config.options.budget);

  const auto rings = run.built.rings();
  std::vector<std::optional<ClassificationReport>> reports(rings.size());
  std::vector<std::string> errors(rings.size());
  parallel_for(rings.size(), config.jobs, [&](std::size_t i) {
    try {
      reports[i] = classify(rings[i].second, config.options);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < rings.size(); ++i) {
    run.table.order.push_back(rings[i].first);
    if (reports[i])
      run.table.reports.emplace(rings[i].first, std::move(*reports[i]));
    else
      run.table.errors.emplace(rings[i].first, errors[i]);
  }

  for (const auto& x : run.built.spec.expectations)
    for (const auto& [verdict, value] : x.verdicts) {
      ExpectationResult e{x.entry, x.basis, verdict, value, std::nullopt};
      if (const auto* rep = run.table.find(x.entry)) e.computed = rep->verdict(verdict);
      run.expectations.push_back(std::move(e));
    }

  std::vector<std::string> ids;
  for (const auto& id : theorem_ids())
    if (config.theorems.empty() || std::find(config.theorems.begin(), config.theorems.end(), id) != config.theorems.end())
      ids.push_back(id);
  run.theorems.resize(ids.size());
  TheoremContext ctx{run.built, run.table, config.options};
  parallel_for(ids.size(), config.jobs, [&](std::size_t i) {
    try {
      run.theorems[i] = run_theorem(ids[i], ctx);
    } catch (const std::exception& e) {
      run.theorems[i] = TheoremCheckResult{};
      run.theorems[i].theorem = ids[i];
      run.theorems[i].failures.push_back(std::string("error: ") + e.what());
    }
  });
  return run;
}

}  // namespace amalgam
