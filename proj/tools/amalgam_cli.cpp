#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "amalgam/report.hpp"
#include "amalgam/theorems.hpp"

using namespace amalgam;
using report::Json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

struct Common {
  std::string spec;
  std::string out;
  unsigned degree = 2;
  bool no_oracle = false;
  Budget budget;

  void add(CLI::App* app) {
    app->add_option("--spec", spec, "Spec file providing the definitions (default: built-in catalog)");
    app->add_option("-o,--out", out, "Write the JSON report to this file ('-' for stdout)");
    app->add_option("--degree", degree, "Degree bound for the bounded Gauss oracles")->check(CLI::Range(1, 4));
    app->add_flag("--no-oracle", no_oracle, "Skip the bounded polynomial Gauss oracle");
    app->add_option("--ring-size", budget.ring_size, "Largest ring any construction may produce");
    app->add_option("--lattice-size", budget.lattice_size, "Largest ring entering full ideal enumeration");
    app->add_option("--iso-nodes", budget.iso_nodes, "Node limit for isomorphism search");
    app->add_option("--gauss-pairs", budget.gauss_pairs, "Pair budget for confirming Gauss oracle runs");
    app->add_option("--refutation-pairs", budget.gauss_refutation_pairs, "Pair budget for refuting Gauss oracle runs");
  }

  ClassifyOptions options() const {
    ClassifyOptions o;
    o.budget = budget;
    o.degree = degree;
    o.run_gauss_oracle = !no_oracle;
    return o;
  }

  Catalog catalog() const { return spec.empty() ? default_catalog() : catalog_from_text(read_file(spec), spec); }
};

void print_errors(const std::vector<SpecError>& errors) {
  for (const auto& e : errors) std::cerr << (e.entry.empty() ? "" : e.entry + ": ") << e.str() << "\n";
}

// Name of a definition in the spec, or an expression evaluated against it.
SpecValue resolve(const Common& c, const std::string& target, const SpecFile& file) {
  if (const auto* d = file.find(target)) return d->value;
  for (const auto& e : file.errors)
    if (e.entry == target) throw UsageError(target + ": " + e.str());
  try {
    return evaluate_expression(target, &file, c.budget);
  } catch (const SpecParseError& e) {
    throw UsageError(e.error().str());
  }
}

SpecFile load_spec(const Common& c) {
  auto file = parse_spec(c.catalog().text, c.budget);
  if (file.has_syntax_errors()) {
    print_errors(file.errors);
    throw UsageError("spec file has syntax errors");
  }
  return file;
}

int cmd_classify(const Common& c, const std::string& target) {
  const auto file = load_spec(c);
  const auto v = resolve(c, target, file);
  if (v.kind == SpecValue::Kind::Ideal || v.kind == SpecValue::Kind::Hom)
    throw UsageError(target + " is " + v.kind_name() + ", not a ring");
  const auto rep = classify(v.ring, c.options());
  std::cout << target << " = " << rep.ring << " (" << rep.size << " elements)\n";
  for (const auto& nv : rep.verdicts) {
    std::cout << "  " << nv.name << ": " << (nv.decision.value ? "true" : "false");
    if (nv.decision.witness) {
      std::cout << "  witness";
      for (const auto& i : nv.decision.witness->items) std::cout << " " << i;
      std::cout << " (" << nv.decision.witness->detail << ")";
    }
    std::cout << "\n";
  }
  for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  Json j = report::envelope("classification", report::utc_timestamp());
  j["entry"] = target;
  j["classification"] = report::classification_json(rep);
  write_json(j, c.out);
  return kPass;
}

int cmd_spectrum(const Common& c, const std::string& target) {
  const auto file = load_spec(c);
  const auto v = resolve(c, target, file);
  if (v.kind != SpecValue::Kind::Amalgamation) throw UsageError(target + " is not an amalgamation");
  const auto& m = *v.amalg;
  const auto s = spectrum_transfer(m, c.budget);
  std::cout << target << " = " << m.carrier().provenance() << "\n";
  std::cout << "  direct spectrum:\n";
  for (const auto& p : s.direct.primes) {
    bool mx = false;
    for (const auto& q : s.direct.maximals) mx = mx || q == p;
    std::cout << "    " << p.describe() << (mx ? "  maximal" : "") << "\n";
  }
  std::cout << "  transferred:\n";
  for (const auto& t : s.lifts)
    std::cout << "    lift of " << t.source.describe() << " -> " << t.image.describe() << (t.maximal ? "  maximal" : "") << "\n";
  for (const auto& t : s.bars)
    std::cout << "    bar of " << t.source.describe() << " -> " << t.image.describe() << (t.maximal ? "  maximal" : "") << "\n";
  std::cout << "  max partition: lift " << s.max_from_lifts << ", bar " << s.max_from_bars << "\n";
  std::cout << "  match: " << (s.ok() ? "yes" : "no") << "\n";
  for (const auto& p : s.problems) std::cout << "  problem: " << p << "\n";
  Json j = report::envelope("spectrum", report::utc_timestamp());
  j["entry"] = target;
  j["spectrum"] = report::spectrum_json(m, s);
  write_json(j, c.out);
  return s.ok() ? kPass : kFail;
}

int cmd_verify(const Common& c, const std::vector<std::string>& theorems, int jobs, bool quiet) {
  RunConfig cfg;
  cfg.options = c.options();
  cfg.theorems = theorems;
  cfg.jobs = jobs;
  const auto catalog = c.catalog();
  CatalogRun run;
  try {
    run = run_catalog(catalog, cfg);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  if (!quiet) std::cout << report::text_summary(run);
  write_json(report::run_json(run, cfg, report::utc_timestamp()), c.out);
  if (run.syntax_errors()) {
    print_errors(run.built.errors);
    return kUsage;
  }
  return run.failure_count() == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amalgamated algebras of finite commutative rings"};
  app.require_subcommand(1);

  Common classify_opts, spectrum_opts, verify_opts;
  std::string classify_target, spectrum_target;

  auto* cls = app.add_subcommand("classify", "Classify a ring against the Prufer-like hierarchy");
  cls->add_option("ring", classify_target, "Definition name or expression")->required();
  classify_opts.add(cls);

  auto* spec = app.add_subcommand("spectrum", "Compare the direct and transferred spectrum of an amalgamation");
  spec->add_option("amalgamation", spectrum_target, "Definition name or expression")->required();
  spectrum_opts.add(spec);

  std::vector<std::string> theorems;
  int jobs = 1;
  bool quiet = false;
  auto* ver = app.add_subcommand("verify", "Build a catalog, classify every ring and run the theorem checks");
  ver->add_option("catalog", verify_opts.spec, "Catalog spec file (default: built-in catalog)");
  ver->add_option("--theorems", theorems, "Run only these checks")->delimiter(',');
  ver->add_option("-j,--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  ver->add_flag("-q,--quiet", quiet, "No text summary");
  verify_opts.out = "report.json";
  verify_opts.add(ver);
  ver->remove_option(ver->get_option("--spec"));

  bool list = false;
  auto* cat = app.add_subcommand("catalog", "Print the built-in catalog");
  cat->add_flag("--list", list, "List entry names and kinds instead of the source");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*cls) return cmd_classify(classify_opts, classify_target);
    if (*spec) return cmd_spectrum(spectrum_opts, spectrum_target);
    if (*ver) return cmd_verify(verify_opts, theorems, jobs, quiet);
    if (*cat) {
      const auto c = default_catalog();
      if (!list) {
        std::cout << c.text;
        return kPass;
      }
      const auto file = parse_spec(c.text);
      for (const auto& d : file.defs) std::cout << d.name << " " << d.value.kind_name() << "\n";
      return kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
