#include "amalgam/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace amalgam::report {

Json decision_json(const Decision& d) {
  Json j;
  j["value"] = d.value;
  j["method"] = d.method;
  if (d.witness) {
    j["witness"] = {{"kind", d.witness->kind}, {"items", d.witness->items}, {"detail", d.witness->detail}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json classification_json(const ClassificationReport& r) {
  Json j;
  j["ring"] = r.ring;
  j["size"] = r.size;
  j["zero_ring"] = r.zero_ring;
  Json v = Json::object();
  for (const auto& nv : r.verdicts) v[nv.name] = decision_json(nv.decision);
  j["verdicts"] = v;
  j["prufer_variants"] = {{"invertibility", r.prufer.invertibility},
                          {"distributive", r.prufer.distributive},
                          {"regular_total_order", r.prufer.rtop}};
  const auto& g = r.gauss_oracle;
  j["gauss_oracle"] = {{"ran", g.ran},           {"bounded", true},          {"p_degree", g.p_degree},
                       {"g_degree", g.g_degree}, {"pairs", g.pairs},         {"complete", g.complete},
                       {"refuted", g.refuted},   {"note", g.note}};
  j["notes"] = r.notes;
  return j;
}

Json theorem_json(const TheoremCheckResult& t) {
  Json j;
  j["theorem"] = t.theorem;
  j["passed"] = t.passed();
  j["instances"] = t.instances;
  j["hypothesis_satisfied"] = t.hypothesis_satisfied;
  j["degenerate"] = t.degenerate;
  j["negative_controls"] = t.negative_controls;
  j["flags"] = t.flags;
  j["failures"] = t.failures;
  Json rs = Json::array();
  for (const auto& r : t.results) {
    Json x;
    x["entry"] = r.entry;
    if (!r.part.empty()) x["part"] = r.part;
    x["hypothesis"] = r.hypothesis;
    x["conclusion"] = r.conclusion ? Json(*r.conclusion) : Json(nullptr);
    x["degenerate"] = r.degenerate;
    x["negative_control"] = r.negative_control;
    x["failed"] = r.failed;
    if (!r.detail.empty()) x["detail"] = r.detail;
    Json f = Json::object();
    for (const auto& [k, v] : r.facts) f[k] = v;
    x["facts"] = f;
    rs.push_back(std::move(x));
  }
  j["results"] = rs;
  return j;
}

Json spectrum_json(const AmalgamatedRing& m, const SpectrumTransferReport& s) {
  Json j;
  j["carrier"] = m.carrier().provenance();
  Json direct = Json::array();
  for (const auto& p : s.direct.primes) {
    bool maximal = false;
    for (const auto& q : s.direct.maximals) maximal = maximal || q == p;
    direct.push_back({{"prime", p.describe()}, {"maximal", maximal}});
  }
  j["direct"] = direct;
  auto transferred = [](const std::vector<TransferredPrime>& v) {
    Json a = Json::array();
    for (const auto& t : v) a.push_back({{"source", t.source.describe()}, {"image", t.image.describe()}, {"maximal", t.maximal}});
    return a;
  };
  j["lifts"] = transferred(s.lifts);
  j["bars"] = transferred(s.bars);
  j["sets_equal"] = s.sets_equal;
  j["lift_image_is_V_b0"] = s.lift_image_is_V_b0;
  j["lift_order_iso"] = s.lift_order_iso;
  j["bar_order_iso"] = s.bar_order_iso;
  j["max_partition"] = {{"lift", s.max_from_lifts}, {"bar", s.max_from_bars}, {"exact", s.max_formula}};
  j["match"] = s.ok();
  j["problems"] = s.problems;
  return j;
}

Json spec_error_json(const SpecError& e) {
  Json j;
  j["entry"] = e.entry;
  j["line"] = e.line;
  j["column"] = e.column;
  const char* kinds[] = {"syntax", "unknown-constructor", "unresolved-reference", "duplicate", "build", "budget"};
  j["kind"] = kinds[static_cast<int>(e.kind)];
  j["message"] = e.message;
  return j;
}

Json envelope(const std::string& kind, const std::string& timestamp) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["report"] = kind;
  j["timestamp"] = timestamp;
  return j;
}

Json run_json(const CatalogRun& run, const RunConfig& config, const std::string& timestamp) {
  Json j = envelope("catalog", timestamp);
  j["catalog_version"] = run.catalog_version;
  const auto& b = config.options.budget;
  j["config"] = {{"degree", config.options.degree},
                 {"gauss_oracle", config.options.run_gauss_oracle},
                 {"theorems", config.theorems},
                 {"budget",
                  {{"ring_size", b.ring_size},
                   {"lattice_size", b.lattice_size},
                   {"iso_nodes", b.iso_nodes},
                   {"gauss_pairs", b.gauss_pairs},
                   {"gauss_refutation_pairs", b.gauss_refutation_pairs}}}};

  Json entries = Json::array();
  for (const auto& d : run.built.spec.defs) {
    Json e{{"id", d.name}, {"kind", d.value.kind_name()}, {"expression", d.expression}};
    if (d.value.kind != SpecValue::Kind::Ideal && d.value.kind != SpecValue::Kind::Hom) e["size"] = d.value.ring.size();
    entries.push_back(std::move(e));
  }
  for (const auto& [id, r] : run.built.raw_rings) entries.push_back({{"id", id}, {"kind", "raw"}, {"size", r.size()}});
  j["entries"] = entries;
  Json errors = Json::array();
  for (const auto& e : run.built.errors) errors.push_back(spec_error_json(e));
  j["build_errors"] = errors;

  Json cls = Json::array();
  for (const auto& id : run.table.order) {
    Json c{{"entry", id}};
    if (const auto* rep = run.table.find(id)) {
      c["classification"] = classification_json(*rep);
    } else {
      c["error"] = run.table.errors.at(id);
    }
    cls.push_back(std::move(c));
  }
  j["classifications"] = cls;

  Json ex = Json::array();
  for (const auto& e : run.expectations)
    ex.push_back({{"entry", e.entry},
                  {"basis", e.basis},
                  {"verdict", e.verdict},
                  {"expected", e.expected},
                  {"computed", e.computed ? Json(*e.computed) : Json(nullptr)},
                  {"ok", e.ok()}});
  j["expectations"] = ex;

  Json th = Json::array();
  for (const auto& t : run.theorems) th.push_back(theorem_json(t));
  j["theorems"] = th;

  std::size_t amalgs = run.built.amalgamations().size(), fibers = run.built.fiber_products().size();
  j["summary"] = {{"rings", run.table.order.size()},
                  {"classified", run.table.reports.size()},
                  {"amalgamations", amalgs},
                  {"fiber_products", fibers},
                  {"theorems", run.theorems.size()},
                  {"failures", run.failure_count()},
                  {"passed", run.failure_count() == 0}};
  return j;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string without_timestamp(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timestamp");
  return j.dump(2);
}

std::string text_summary(const CatalogRun& run) {
  std::ostringstream out;
  out << "catalog " << run.catalog_version << ": " << run.table.order.size() << " rings, "
      << run.built.amalgamations().size() << " amalgamations, " << run.built.fiber_products().size()
      << " fiber products\n";
  for (const auto& e : run.built.errors) out << "  build error " << (e.entry.empty() ? "" : e.entry + " ") << e.str() << "\n";
  for (const auto& [id, msg] : run.table.errors) out << "  classification error " << id << ": " << msg << "\n";
  for (const auto& e : run.expectations)
    if (!e.ok()) out << "  expectation mismatch " << e.entry << " " << e.verdict << "\n";
  for (const auto& t : run.theorems) {
    out << "  " << (t.passed() ? "ok   " : "FAIL ") << t.theorem << ": " << t.instances << " instances, "
        << t.hypothesis_satisfied << " hypothesis-satisfied";
    if (t.degenerate) out << ", " << t.degenerate << " degenerate";
    if (t.negative_controls) out << ", " << t.negative_controls << " negative controls";
    out << "\n";
    for (const auto& f : t.flags) out << "       " << f << "\n";
    for (const auto& f : t.failures) out << "       failure: " << f << "\n";
  }
  out << (run.failure_count() == 0 ? "PASS" : "FAIL") << " (" << run.failure_count() << " failures)\n";
  return out.str();
}

}  // namespace amalgam::report
