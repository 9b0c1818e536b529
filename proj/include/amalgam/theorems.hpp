#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/classify.hpp"
#include "amalgam/spec_parser.hpp"

namespace amalgam {

/// Ring given directly by its tables; used for entries that bypass the grammar.
struct RawRingEntry {
  std::string id;
  RingTables tables;
  std::vector<std::string> names;
};

struct Catalog {
  std::string version;
  std::string text;  // spec-grammar source
  std::vector<RawRingEntry> raw;
};

/// The built-in catalog shipped with the library.
Catalog default_catalog();
Catalog catalog_from_text(std::string text, std::string version = "user");

struct BuiltCatalog {
  SpecFile spec;
  std::vector<std::pair<std::string, Ring>> raw_rings;
  std::vector<SpecError> errors;

  /// Every ring-valued entry (rings, amalgamation and fiber-product carriers), in
  /// definition order followed by raw entries.
  std::vector<std::pair<std::string, Ring>> rings() const;
  std::vector<std::pair<std::string, std::shared_ptr<const AmalgamatedRing>>> amalgamations() const;
  std::vector<std::pair<std::string, std::shared_ptr<const FiberProduct>>> fiber_products() const;
  /// Hom entries plus the structure maps of amalgamations and fiber products.
  std::vector<std::pair<std::string, RingHom>> homs() const;
};

BuiltCatalog build_catalog(const Catalog& c, const Budget& budget = {});

/// One (theorem, instance) evaluation.
struct InstanceResult {
  std::string entry;
  std::string part;  // sub-claim within the theorem, may be empty
  bool hypothesis = false;
  std::optional<bool> conclusion;
  bool degenerate = false;
  bool negative_control = false;
  bool failed = false;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> facts;
};

struct TheoremCheckResult {
  std::string theorem;
  std::size_t instances = 0;
  std::size_t hypothesis_satisfied = 0;
  std::size_t degenerate = 0;
  std::size_t negative_controls = 0;
  std::vector<std::string> flags;
  std::vector<InstanceResult> results;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Classifications of every catalog ring, keyed by entry id.
struct ClassificationTable {
  std::vector<std::string> order;
  std::map<std::string, ClassificationReport> reports;
  std::map<std::string, std::string> errors;

  const ClassificationReport* find(const std::string& id) const;
};

struct TheoremContext {
  const BuiltCatalog& catalog;
  const ClassificationTable& table;
  ClassifyOptions options;
};

using TheoremCheck = TheoremCheckResult (*)(const TheoremContext&);

/// Theorem ids in report order.
const std::vector<std::string>& theorem_ids();
TheoremCheckResult run_theorem(const std::string& id, const TheoremContext& ctx);

TheoremCheckResult check_hierarchy(const TheoremContext& ctx);
TheoremCheckResult check_products(const TheoremContext& ctx);
TheoremCheckResult check_gauss_locality(const TheoremContext& ctx);
TheoremCheckResult check_quotient_isos(const TheoremContext& ctx);
TheoremCheckResult check_fiber_identity(const TheoremContext& ctx);
TheoremCheckResult check_spectrum_transfer(const TheoremContext& ctx);
TheoremCheckResult check_localization(const TheoremContext& ctx);
TheoremCheckResult check_regular_conductor(const TheoremContext& ctx);
TheoremCheckResult check_gauss_retract(const TheoremContext& ctx);
TheoremCheckResult check_prufer_descent(const TheoremContext& ctx);
TheoremCheckResult check_im_reg(const TheoremContext& ctx);
TheoremCheckResult check_total_sufficiency(const TheoremContext& ctx);
TheoremCheckResult check_bS0(const TheoremContext& ctx);
TheoremCheckResult check_valfib(const TheoremContext& ctx);
TheoremCheckResult check_arithm_sur(const TheoremContext& ctx);
TheoremCheckResult check_wgldim_sur(const TheoremContext& ctx);
TheoremCheckResult check_semih_sur(const TheoremContext& ctx);
TheoremCheckResult check_finite_embedding(const TheoremContext& ctx);

/// Greedy smallest-index-first generators of b as an A-module via f.
std::vector<Elem> module_generators(const AmalgamatedRing& m);
/// A-submodule of the carrier generated by `gens` through iota.
Subset iota_module_span(const AmalgamatedRing& m, const std::vector<Elem>& gens);

struct ExpectationResult {
  std::string entry;
  std::string basis;
  std::string verdict;
  bool expected = false;
  std::optional<bool> computed;
  bool ok() const { return computed && *computed == expected; }
};

struct RunConfig {
  ClassifyOptions options;
  /// Empty means every theorem.
  std::vector<std::string> theorems;
  int jobs = 1;
};

struct CatalogRun {
  std::string catalog_version;
  BuiltCatalog built;
  ClassificationTable table;
  std::vector<ExpectationResult> expectations;
  std::vector<TheoremCheckResult> theorems;

  std::size_t failure_count() const;
  bool syntax_errors() const;
};

/// Builds, classifies and checks. Output does not depend on `jobs`.
CatalogRun run_catalog(const Catalog& c, const RunConfig& config = {});

}  // namespace amalgam
