#include "amalgam/classify.hpp"

#include <algorithm>
#include <cmath>

#include "amalgam/constructors.hpp"
#include "amalgam/kernels.hpp"

namespace amalgam {

namespace {

std::string at_maximal(const Ideal& m) { return "at the maximal ideal " + m.describe(); }

Decision vacuous() { return Decision{true, std::nullopt, "vacuous: zero ring"}; }

std::string poly_string(const Ring& r, std::vector<Elem> c) { return PolyOverRing(r, std::move(c)).to_string("T"); }

bool is_domain(const Ring& r) {
  if (r.is_zero_ring()) return false;
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      if (a != r.zero() && b != r.zero() && r.mul(a, b) == r.zero()) return false;
  return true;
}

bool is_field(const Ring& r) {
  return !r.is_zero_ring() && regularity_scan(r).units.count() == r.size() - 1;
}

bool has_principal_generator(const IdealLattice& l, int id) {
  for (Elem x = 0; x < l.ring().size(); ++x)
    if (l.principal(x) == id) return true;
  return false;
}

}  // namespace

LocalPicture local_picture(const Ring& r, const Budget& budget) {
  LocalPicture lp{r, {}, {}};
  lp.maximals = spectrum(r, budget).maximals;
  for (const auto& m : lp.maximals) lp.locals.push_back(localize_at(m, budget));
  return lp;
}

Decision has_rtop(const Ring& r, const Ideal& p, const Budget& budget) {
  if (!prime_test(p).prime) throw InvalidArgument("has_rtop: " + p.describe() + " is not prime");
  LocalizedRing loc = localize_at(p, budget);
  const auto ideals = all_ideals(r, budget);
  std::vector<Ideal> ext;
  std::vector<char> regular;
  for (const auto& i : ideals) {
    ext.push_back(extension(loc.canonical, i));
    regular.push_back(is_regular_ideal(r, i).regular);
  }
  Decision d{true, std::nullopt, "comparability of localized ideal pairs with a regular member"};
  for (std::size_t i = 0; i < ideals.size() && d.value; ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (!regular[i] && !regular[j]) continue;
      if (ext[i].subset_of(ext[j]) || ext[j].subset_of(ext[i])) continue;
      d.value = false;
      d.witness = Witness{"ideal-pair", {ideals[i].describe(), ideals[j].describe()},
                          "localized ideals are incomparable " + at_maximal(p)};
      break;
    }
  return d;
}

PruferDecision is_prufer(const Ring& r, const Budget& budget) {
  PruferDecision out;
  if (r.is_zero_ring()) {
    out.verdict = vacuous();
    return out;
  }
  out.verdict.method = "invertibility in Tot(R), regular distributivity, regular total order property";

  // (i) every regular finitely generated ideal is invertible in Tot(R).
  LocalizedRing tot = total_quotient_ring(r, budget);
  const Ring& T = tot.carrier;
  const Subset base = tot.canonical.image_set();
  const auto ideals = all_ideals(r, budget);
  std::optional<Witness> w_inv;
  for (const auto& i : ideals) {
    if (!is_regular_ideal(r, i).regular) continue;
    std::vector<Elem> img;
    i.members().for_each([&](Elem x) { img.push_back(tot.canonical(x)); });
    Subset products(T.size());
    for (Elem t = 0; t < T.size(); ++t) {
      const bool in_inverse = std::all_of(img.begin(), img.end(), [&](Elem y) { return base.contains(T.mul(t, y)); });
      if (!in_inverse) continue;
      for (Elem y : img) products.insert(T.mul(t, y));
    }
    if (!(additive_closure(T, products) == base)) {
      out.invertibility = false;
      w_inv = Witness{"ideal", {i.describe()}, "I (R :_Tot I) differs from R"};
      break;
    }
  }

  // (ii) a(b ∩ c) = ab ∩ ac whenever b or c is regular.
  IdealLattice lattice(r, budget);
  auto census = kernels::census_parallel(lattice.ops(), true);
  std::optional<Witness> w_dist;
  if (census.product_violations > 0) {
    out.distributive = false;
    const auto& t = *census.product_witness;
    w_dist = Witness{"ideal-triple",
                     {lattice.ideals()[t[0]].describe(), lattice.ideals()[t[1]].describe(),
                      lattice.ideals()[t[2]].describe()},
                     "a(b ∩ c) differs from ab ∩ ac"};
  }

  // (iii) regular total order property at every maximal ideal.
  std::optional<Witness> w_rtop;
  for (const auto& m : spectrum(r, budget).maximals) {
    auto d = has_rtop(r, m, budget);
    if (!d.value) {
      out.rtop = false;
      w_rtop = d.witness;
      break;
    }
  }

  enforce(out.invertibility == out.distributive && out.distributive == out.rtop,
          "Prüfer characterizations disagree on " + r.provenance());
  out.verdict.value = out.invertibility;
  out.verdict.witness = w_inv ? w_inv : (w_dist ? w_dist : w_rtop);
  enforce(out.verdict.value, "a finite ring failed to be Prüfer: " + r.provenance());
  return out;
}

Decision is_locally_prufer(const Ring& r, const Budget& budget) {
  if (r.is_zero_ring()) return vacuous();
  Decision d{true, std::nullopt, "Prüfer test on each localization at a maximal ideal"};
  const auto lp = local_picture(r, budget);
  for (std::size_t k = 0; k < lp.locals.size(); ++k) {
    auto p = is_prufer(lp.locals[k].carrier, budget);
    if (!p.verdict.value) {
      d.value = false;
      d.witness = Witness{"ideal", {lp.maximals[k].describe()}, "localization is not Prüfer"};
      break;
    }
  }
  if (d.value) enforce(is_prufer(r, budget).verdict.value, "locally Prüfer but not Prüfer: " + r.provenance());
  return d;
}

Decision is_total_ring_of_fractions(const Ring& r) {
  if (r.is_zero_ring()) return vacuous();
  Decision d{true, std::nullopt, "every non-unit is a zero divisor; canonical map to Tot(R) checked"};
  const auto reg = regularity_scan(r);
  for (Elem x = 0; x < r.size() && d.value; ++x) {
    if (reg.units.contains(x)) continue;
    bool zd = false;
    for (Elem y = 0; y < r.size() && !zd; ++y) zd = y != r.zero() && r.mul(x, y) == r.zero();
    if (!zd) {
      d.value = false;
      d.witness = Witness{"element", {r.name(x)}, "regular non-unit"};
    }
  }
  total_quotient_ring(r);
  return d;
}

Decision is_arithmetical(const Ring& r, const Budget& budget) {
  if (r.is_zero_ring()) return vacuous();
  Decision d{true, std::nullopt, "localizations at maximal ideals are chain rings; locally principal oracle"};
  const auto lp = local_picture(r, budget);
  const auto ideals = all_ideals(r, budget);
  bool oracle = true;
  for (std::size_t k = 0; k < lp.locals.size(); ++k) {
    const auto& loc = lp.locals[k];
    IdealLattice l(loc.carrier, budget);
    const bool chain = ideals_totally_ordered(loc.carrier, budget).chain;
    for (const auto& i : ideals)
      if (!has_principal_generator(l, l.id_of(extension(loc.canonical, i).members()))) oracle = false;
    if (chain || !d.value) continue;
    d.value = false;
    for (Elem x = 0; x < r.size() && !d.witness; ++x)
      for (Elem y = x + 1; y < r.size(); ++y) {
        const int px = l.principal(loc.canonical(x)), py = l.principal(loc.canonical(y));
        const int j = l.join(px, py);
        if (j != px && j != py) {
          d.witness = Witness{"element-pair", {r.name(x), r.name(y)},
                              "principal ideals incomparable " + at_maximal(lp.maximals[k])};
          break;
        }
      }
    enforce(d.witness.has_value(), "non-chain localization without an incomparable principal pair: " + r.provenance());
  }
  enforce(d.value == oracle, "arithmetical criterion and locally principal oracle disagree on " + r.provenance());
  return d;
}

Decision has_wgd_le_1(const Ring& r, const Budget& budget) {
  if (r.is_zero_ring()) return vacuous();
  Decision d{true, std::nullopt, "localizations at maximal ideals are valuation domains; field shortcut"};
  const auto lp = local_picture(r, budget);
  bool fields = true;
  for (std::size_t k = 0; k < lp.locals.size(); ++k) {
    const auto& loc = lp.locals[k];
    const bool valuation = is_domain(loc.carrier) && ideals_totally_ordered(loc.carrier, budget).chain;
    fields = fields && is_field(loc.carrier);
    if (valuation || !d.value) continue;
    d.value = false;
    const auto reg = regularity_scan(loc.carrier);
    for (Elem x = 0; x < r.size(); ++x) {
      const Elem a = loc.canonical(x);
      if (a != loc.carrier.zero() && reg.zerodivisors.contains(a)) {
        d.witness = Witness{"element", {r.name(x)}, "nonzero zero divisor " + at_maximal(lp.maximals[k])};
        break;
      }
    }
  }
  enforce(d.value == fields, "valuation-domain test and field test disagree on " + r.provenance());
  return d;
}

Decision is_semihereditary(const Ring& r, const Budget& budget) {
  if (r.is_zero_ring()) return vacuous();
  // Finite rings are Noetherian, hence coherent.
  Decision wgd = has_wgd_le_1(r, budget);
  Decision d{wgd.value, wgd.witness, "coherent (finite ring) and wgd <= 1; locally free rank <= 1 oracle"};
  const auto lp = local_picture(r, budget);
  bool oracle = true;
  std::optional<Witness> ow;
  for (const auto& i : all_ideals(r, budget)) {
    for (std::size_t k = 0; k < lp.locals.size() && oracle; ++k) {
      const auto& loc = lp.locals[k];
      const Ideal e = extension(loc.canonical, i);
      if (e.is_zero()) continue;
      bool free = false;
      for (Elem g = 0; g < loc.carrier.size() && !free; ++g)
        free = principal_ideal(loc.carrier, g) == e && annihilator(loc.carrier, g).is_zero();
      if (!free) {
        oracle = false;
        ow = Witness{"ideal", {i.describe()}, "not locally free of rank one " + at_maximal(lp.maximals[k])};
      }
    }
    if (!oracle) break;
  }
  enforce(d.value == oracle, "semihereditary main path and oracle disagree on " + r.provenance());
  if (!d.witness) d.witness = ow;
  return d;
}

Decision is_gauss_polynomial(const PolyOverRing& p, unsigned d, const Budget& budget) {
  const Ring& r = p.ring();
  IdealLattice l(r, budget);
  const auto t = l.content_tables();
  const double pairs = std::pow(static_cast<double>(r.size()), d + 1);
  if (pairs > static_cast<double>(budget.gauss_refutation_pairs))
    throw BudgetExceeded("is_gauss_polynomial: " + std::to_string(r.size()) + "^" + std::to_string(d + 1) +
                         " polynomials exceed the pair budget");
  auto out = kernels::gauss_polynomial_parallel(t, p.coeffs(), d);
  Decision dec{true, std::nullopt, "c(pg) = c(p)c(g) for every g of degree <= " + std::to_string(d) + " (bounded)"};
  if (out.failure) {
    dec.value = false;
    dec.witness = Witness{"polynomial-pair",
                          {p.to_string("T"), poly_string(r, out.failure->g)},
                          "c(pg) = " + l.ideals()[out.failure->content_pg].describe() + " but c(p)c(g) = " +
                              l.ideals()[out.failure->content_product].describe()};
  }
  return dec;
}

Decision gauss_criterion(const Ring& r, const Budget& budget) {
  if (r.is_zero_ring()) return vacuous();
  Decision d{true, std::nullopt, "local two-generator criterion at each maximal ideal"};
  const auto lp = local_picture(r, budget);
  for (std::size_t k = 0; k < lp.locals.size() && d.value; ++k) {
    const auto& loc = lp.locals[k];
    const Ring& L = loc.carrier;
    IdealLattice l(L, budget);
    for (Elem x = 0; x < r.size() && d.value; ++x)
      for (Elem y = x + 1; y < r.size(); ++y) {
        const Elem a = loc.canonical(x), b = loc.canonical(y);
        const Elem a2 = L.mul(a, a), b2 = L.mul(b, b), ab = L.mul(a, b);
        const int pa2 = l.principal(a2), pb2 = l.principal(b2);
        const int sq = l.join(l.join(pa2, l.principal(ab)), pb2);
        std::string why;
        if (sq != pa2 && sq != pb2)
          why = "(a,b)^2 equals neither (a^2) nor (b^2)";
        else if (ab == L.zero() && ((sq == pa2 && b2 != L.zero()) || (sq == pb2 && a2 != L.zero())))
          why = "ab = 0 and (a,b)^2 is principal on one square while the other square is nonzero";
        if (why.empty()) continue;
        d.value = false;
        d.witness = Witness{"element-pair", {r.name(x), r.name(y)}, why + " " + at_maximal(lp.maximals[k])};
        break;
      }
  }
  return d;
}

GaussDecision is_gauss(const Ring& r, const ClassifyOptions& opts) {
  GaussDecision out;
  out.verdict = gauss_criterion(r, opts.budget);
  if (r.is_zero_ring() || !opts.run_gauss_oracle) return out;

  IdealLattice l(r, opts.budget);
  const auto t = l.content_tables();
  const double n = static_cast<double>(r.size());
  auto pairs_for = [&](unsigned pd, unsigned gd) { return std::pow(n, pd + 1) * std::pow(n, gd + 1); };
  auto& o = out.oracle;

  auto record_failure = [&](const kernels::GaussOutcome& res) {
    o.refuted = true;
    const auto& f = *res.failure;
    o.note = "p = " + poly_string(r, f.p) + ", g = " + poly_string(r, f.g) + ": c(pg) = " +
             l.ideals()[f.content_pg].describe() + ", c(p)c(g) = " + l.ideals()[f.content_product].describe();
  };

  if (!out.verdict.value) {
    // Refutation: lowest degrees first; the budget only caps a search that keeps finding nothing.
    const std::pair<unsigned, unsigned> modes[] = {{1, 1}, {1, 2}, {2, 2}};
    for (auto [pd, gd] : modes) {
      if (pd > std::max(1U, opts.degree) || gd > std::max(1U, opts.degree)) continue;
      auto res = kernels::gauss_search_parallel(t, {pd, gd, opts.budget.gauss_refutation_pairs});
      o.ran = true;
      o.p_degree = pd;
      o.g_degree = gd;
      o.pairs = res.pairs;
      o.complete = res.complete;
      if (res.failure) {
        record_failure(res);
        break;
      }
    }
    enforce(o.refuted, "Gauss criterion refutes " + r.provenance() + " but the polynomial oracle found no failing pair");
    return out;
  }

  const std::pair<unsigned, unsigned> modes[] = {{2, 2}, {1, 2}, {1, 1}};
  for (auto [pd, gd] : modes) {
    if (pd > opts.degree || gd > opts.degree) continue;
    if (pairs_for(pd, gd) > static_cast<double>(opts.budget.gauss_pairs)) continue;
    auto res = kernels::gauss_search_parallel(t, {pd, gd, 0});
    o.ran = true;
    o.p_degree = pd;
    o.g_degree = gd;
    o.pairs = res.pairs;
    o.complete = res.complete;
    if (res.failure) record_failure(res);
    break;
  }
  if (!o.ran) o.note = "ring too large for the bounded oracle within the pair budget";
  enforce(!o.refuted, "Gauss criterion accepts " + r.provenance() + " but the polynomial oracle refutes it: " + o.note);
  return out;
}

const std::vector<std::string>& verdict_names() {
  static const std::vector<std::string> names{"P1_semihereditary", "P2_wgd_le_1",     "P3_arithmetical",
                                              "P4_gauss",          "P5_prufer",       "locally_prufer",
                                              "total_ring_of_fractions", "local",   "chain_ring",
                                              "coherent"};
  return names;
}

bool ClassificationReport::verdict(const std::string& name) const { return decision(name).value; }

const Decision& ClassificationReport::decision(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return v.decision;
  throw InvalidArgument("unknown verdict " + name);
}

ClassificationReport classify(const Ring& r, const ClassifyOptions& opts) {
  ClassificationReport rep;
  rep.ring = r.provenance();
  rep.size = r.size();
  rep.zero_ring = r.is_zero_ring();
  const Budget& b = opts.budget;
  if (rep.zero_ring) {
    for (const auto& n : verdict_names()) rep.verdicts.push_back({n, vacuous()});
    rep.prufer.verdict = vacuous();
    rep.notes.push_back("zero ring: every verdict holds vacuously");
    return rep;
  }

  auto gauss = is_gauss(r, opts);
  rep.gauss_oracle = gauss.oracle;
  rep.prufer = is_prufer(r, b);
  Decision chain{true, std::nullopt, "ideal lattice is a chain"};
  auto c = ideals_totally_ordered(r, b);
  if (!c.chain) {
    chain.value = false;
    chain.witness = Witness{"ideal-pair", {c.incomparable->first.describe(), c.incomparable->second.describe()},
                            "incomparable ideals"};
  }
  Decision local{true, std::nullopt, "one maximal ideal"};
  const auto sp = spectrum(r, b);
  if (!sp.is_local()) {
    local.value = false;
    local.witness = Witness{"ideal-pair", {sp.maximals[0].describe(), sp.maximals[1].describe()}, "distinct maximal ideals"};
  }

  rep.verdicts = {{"P1_semihereditary", is_semihereditary(r, b)},
                  {"P2_wgd_le_1", has_wgd_le_1(r, b)},
                  {"P3_arithmetical", is_arithmetical(r, b)},
                  {"P4_gauss", gauss.verdict},
                  {"P5_prufer", rep.prufer.verdict},
                  {"locally_prufer", is_locally_prufer(r, b)},
                  {"total_ring_of_fractions", is_total_ring_of_fractions(r)},
                  {"local", local},
                  {"chain_ring", chain},
                  {"coherent", Decision{true, std::nullopt, "finite rings are Noetherian, hence coherent"}}};

  const bool p1 = rep.verdict("P1_semihereditary"), p2 = rep.verdict("P2_wgd_le_1"), p3 = rep.verdict("P3_arithmetical"),
             p4 = rep.verdict("P4_gauss"), p5 = rep.verdict("P5_prufer"), loc = rep.verdict("locally_prufer");
  const std::string where = " on " + r.provenance();
  enforce(!p1 || p2, "P1 without P2" + where);
  enforce(!p2 || p3, "P2 without P3" + where);
  enforce(!p3 || p4, "P3 without P4" + where);
  enforce(!p4 || p5, "P4 without P5" + where);
  enforce(!p4 || loc, "P4 without locally Prüfer" + where);
  enforce(!loc || p5, "locally Prüfer without P5" + where);
  enforce(p1 == p2, "P1 and P2 differ on a coherent ring" + where);
  if (!gauss.oracle.ran) rep.notes.push_back("Gauss oracle skipped: " + gauss.oracle.note);
  return rep;
}

ProductConsistency product_consistency_check(const ClassificationReport& product, const ClassificationReport& left,
                                             const ClassificationReport& right) {
  ProductConsistency out;
  for (const char* n : {"P1_semihereditary", "P2_wgd_le_1", "P3_arithmetical", "P4_gauss", "P5_prufer", "locally_prufer"}) {
    if (product.verdict(n) != (left.verdict(n) && right.verdict(n))) {
      out.consistent = false;
      out.mismatches.push_back(n);
    }
  }
  return out;
}

ProductConsistency product_consistency_check(const Ring& r1, const Ring& r2, const ClassifyOptions& opts) {
  auto p = mk_product(r1, r2, opts.budget);
  return product_consistency_check(classify(p.ring, opts), classify(r1, opts), classify(r2, opts));
}

}  // namespace amalgam
