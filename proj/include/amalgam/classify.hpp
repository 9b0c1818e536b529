#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/localization.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Concrete counterexample attached to a false verdict.
struct Witness {
  std::string kind;  // "element", "element-pair", "ideal", "ideal-pair", "ideal-triple", "polynomial-pair"
  std::vector<std::string> items;
  std::string detail;
};

struct Decision {
  bool value = true;
  std::optional<Witness> witness;
  std::string method;
};

struct ClassifyOptions {
  Budget budget;
  /// Polynomial degree bound for the bounded Gauss oracle.
  unsigned degree = 2;
  bool run_gauss_oracle = true;
};

/// Localizations at every maximal ideal, computed once per ring.
struct LocalPicture {
  Ring ring;
  std::vector<Ideal> maximals;
  std::vector<LocalizedRing> locals;
};
LocalPicture local_picture(const Ring& r, const Budget& budget = {});

struct PruferDecision {
  Decision verdict;
  bool invertibility = true;  // regular f.g. ideals invertible in Tot(R)
  bool distributive = true;   // a(b ∩ c) = ab ∩ ac with b or c regular
  bool rtop = true;           // regular total order property at each maximal
};
/// Three independent characterizations; throws InvariantViolation if they
/// disagree or if the verdict is false (impossible on a finite ring).
PruferDecision is_prufer(const Ring& r, const Budget& budget = {});
Decision has_rtop(const Ring& r, const Ideal& p, const Budget& budget = {});
Decision is_locally_prufer(const Ring& r, const Budget& budget = {});
Decision is_total_ring_of_fractions(const Ring& r);
/// Each localization at a maximal is a chain ring; cross-checked against
/// "every ideal is locally principal".
Decision is_arithmetical(const Ring& r, const Budget& budget = {});
/// Each localization at a maximal is a valuation domain; cross-checked
/// against "each localization is a field".
Decision has_wgd_le_1(const Ring& r, const Budget& budget = {});
/// Coherent (constant on finite rings) and wgd <= 1; cross-checked against
/// "every ideal is locally zero or free of rank one".
Decision is_semihereditary(const Ring& r, const Budget& budget = {});

/// c(pg) = c(p)c(g) for every g with deg g <= d. Bounded: a true answer only
/// covers that range.
Decision is_gauss_polynomial(const PolyOverRing& p, unsigned d, const Budget& budget = {});

struct GaussOracleRun {
  bool ran = false;
  unsigned p_degree = 0;
  unsigned g_degree = 0;
  std::uint64_t pairs = 0;
  bool complete = false;
  bool refuted = false;
  std::string note;
};

struct GaussDecision {
  Decision verdict;  // from the local two-generator criterion
  GaussOracleRun oracle;
};
/// Local criterion on every R_m, with the bounded polynomial oracle as a
/// cross-check. Throws InvariantViolation when the two disagree.
GaussDecision is_gauss(const Ring& r, const ClassifyOptions& opts = {});
/// Criterion only.
Decision gauss_criterion(const Ring& r, const Budget& budget = {});

struct NamedVerdict {
  std::string name;
  Decision decision;
};

struct ClassificationReport {
  std::string ring;
  std::size_t size = 0;
  bool zero_ring = false;
  std::vector<NamedVerdict> verdicts;
  PruferDecision prufer;
  GaussOracleRun gauss_oracle;
  std::vector<std::string> notes;

  bool verdict(const std::string& name) const;
  const Decision& decision(const std::string& name) const;
};

/// Verdict names in report order.
const std::vector<std::string>& verdict_names();

/// Runs every predicate and asserts P1 ⇒ P2 ⇒ P3 ⇒ P4 ⇒ P5, P4 ⇒ locally
/// Prüfer ⇒ P5 and P1 ⇔ P2.
ClassificationReport classify(const Ring& r, const ClassifyOptions& opts = {});

struct ProductConsistency {
  bool consistent = true;
  std::vector<std::string> mismatches;
};
/// Verdicts for P1..P5 and locally Prüfer on R1 × R2 are the conjunctions of
/// the factors' verdicts.
ProductConsistency product_consistency_check(const ClassificationReport& product, const ClassificationReport& left,
                                             const ClassificationReport& right);
ProductConsistency product_consistency_check(const Ring& r1, const Ring& r2, const ClassifyOptions& opts = {});

}  // namespace amalgam
