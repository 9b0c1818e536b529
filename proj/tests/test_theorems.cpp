#include "doctest.h"

#include <set>

#include "amalgam/report.hpp"
#include "amalgam/theorems.hpp"

using namespace amalgam;

namespace {

const CatalogRun& default_run() {
  static const CatalogRun run = run_catalog(default_catalog());
  return run;
}

const TheoremCheckResult& theorem(const CatalogRun& run, const std::string& id) {
  for (const auto& t : run.theorems)
    if (t.theorem == id) return t;
  throw std::runtime_error("no theorem " + id);
}

const InstanceResult& result(const std::string& id, const std::string& entry, const std::string& part = {}) {
  for (const auto& r : theorem(default_run(), id).results)
    if (r.entry == entry && r.part == part) return r;
  throw std::runtime_error("no instance " + entry + " in " + id);
}

std::string fact(const InstanceResult& r, const std::string& key) {
  for (const auto& [k, v] : r.facts)
    if (k == key) return v;
  throw std::runtime_error("no fact " + key);
}

const AmalgamatedRing& amalg(const std::string& id) { return *default_run().built.spec.find(id)->value.amalg; }

// A-span of the given ambient pairs, by brute force over coefficient vectors.
std::size_t brute_span(const AmalgamatedRing& m, const std::vector<std::pair<Elem, Elem>>& gens) {
  const Ring& A = m.A();
  const Ring& B = m.B();
  std::set<std::pair<Elem, Elem>> seen;
  std::vector<Elem> coef(gens.size(), 0);
  while (true) {
    Elem a = A.zero(), b = B.zero();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      a = A.add(a, A.mul(coef[k], gens[k].first));
      b = B.add(b, B.mul(m.spec.f(coef[k]), gens[k].second));
    }
    seen.emplace(a, b);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == A.size()) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  return seen.size();
}

}  // namespace

TEST_CASE("default catalog passes") {
  const auto& run = default_run();
  CHECK(run.built.errors.empty());
  CHECK(run.table.errors.empty());
  CHECK(run.table.order.size() >= 12);
  CHECK(run.built.amalgamations().size() >= 6);
  CHECK(run.failure_count() == 0);
  for (const auto& e : run.expectations) {
    CAPTURE(e.entry);
    CAPTURE(e.verdict);
    CHECK(e.ok());
  }
  for (const auto& t : run.theorems) {
    CAPTURE(t.theorem);
    CHECK(t.passed());
    CHECK(t.instances > 0);
  }
  CHECK(run.theorems.size() == theorem_ids().size());
}

TEST_CASE("regular conductor") {
  const auto& e1 = result("regular_conductor", "E1");
  CHECK(e1.hypothesis);
  CHECK(e1.degenerate);
  CHECK(e1.conclusion == true);
  CHECK(amalg("E1").carrier().size() == 8);
  const auto& d = result("regular_conductor", "DUP22");
  CHECK(d.hypothesis);
  CHECK(d.degenerate);
  CHECK_FALSE(result("regular_conductor", "E2").hypothesis);
  const auto& t = theorem(default_run(), "regular_conductor");
  CHECK(t.degenerate == t.hypothesis_satisfied);
  CHECK(std::find(t.flags.begin(), t.flags.end(), "hypothesis holds only degenerately on finite carriers") != t.flags.end());
}

TEST_CASE("gauss retract") {
  const auto& r = result("gauss_retract", "DUP42", "gauss");
  CHECK(r.hypothesis);
  CHECK(r.conclusion == true);
  const auto& a = result("gauss_retract", "E2", "arithmetical");
  CHECK(a.hypothesis);
  CHECK(a.conclusion == true);
  const auto& p = result("gauss_retract", "E2", "retract");
  CHECK(fact(p, "degree") == "2");
  CHECK(fact(p, "polynomials") == "64");
  CHECK_FALSE(p.failed);
  // E5 carrier is not arithmetical: no constraint
  CHECK_FALSE(result("gauss_retract", "E5", "arithmetical").hypothesis);
}

TEST_CASE("prufer descent") {
  for (const char* id : {"E1", "E2"}) {
    const auto& r = result("prufer_descent", id);
    CHECK(r.hypothesis);
    CHECK(r.conclusion == true);
  }
}

TEST_CASE("im-reg degenerate instances and census") {
  const auto& h = result("im_reg", "H41");
  CHECK(h.hypothesis);
  CHECK(h.degenerate);
  CHECK(h.conclusion == true);
  CHECK_FALSE(result("im_reg", "H42").hypothesis);
  const auto& t = theorem(default_run(), "im_reg");
  CHECK(t.degenerate == t.hypothesis_satisfied);
  CHECK(t.hypothesis_satisfied > 0);

  const auto& z8 = result("im_reg", "Z8", "census");
  CHECK(fact(z8, "product_violations") == "0");
  CHECK(fact(z8, "lattice_violations") == "0");
  const auto& d = result("im_reg", "DUP42", "census");
  CHECK(fact(d, "lattice_violations") != "0");
  CHECK(fact(d, "arithmetical") == "false");

  // independent count over the subgroup-filter ideal list
  const Ring& r = amalg("DUP42").carrier();
  auto ideals = ideals_by_subgroup_filter(r);
  std::size_t bad = 0;
  for (const auto& a : ideals)
    for (const auto& b : ideals)
      for (const auto& c : ideals)
        if (!(ideal_intersection(a, ideal_sum(b, c)) == ideal_sum(ideal_intersection(a, b), ideal_intersection(a, c)))) ++bad;
  CHECK(std::to_string(bad) == fact(d, "lattice_violations"));
}

TEST_CASE("total ring sufficiency") {
  const auto& e2 = result("total_sufficiency", "E2");
  CHECK_FALSE(e2.hypothesis);
  CHECK(fact(e2, "A_total") == "true");
  CHECK(fact(e2, "b_in_jacobson") == "true");
  CHECK(fact(e2, "b_in_image") == "false");
  CHECK(fact(e2, "b_torsion") == "false");
  CHECK(fact(e2, "carrier_total") == "true");
  const auto& d = result("total_sufficiency", "DUP42");
  CHECK(d.hypothesis);
  CHECK(d.conclusion == true);
  const auto& z = result("total_sufficiency", "DUP40");
  CHECK(z.hypothesis);
  CHECK(z.conclusion == true);
}

TEST_CASE("bS0 and its negative control") {
  const auto& d = result("bS0", "DUP62");
  CHECK(d.hypothesis);
  CHECK(d.conclusion == true);
  CHECK(fact(d, "maximals_over_preimage") == "(2)");
  CHECK(fact(d, "maximals_of_B_outside_b") == "(3)");
  CHECK(fact(d, "premise_gauss") == "true");
  const auto& e2 = result("bS0", "E2");
  CHECK_FALSE(e2.hypothesis);
  CHECK(e2.negative_control);
  CHECK(fact(e2, "carrier_gauss") == "true");
}

TEST_CASE("valfib") {
  const auto& e2 = result("valfib", "E2", "as fiber product");
  CHECK(fact(e2, "chain") == "true");
  CHECK(fact(e2, "rho_injective") == "true");
  CHECK(fact(e2, "criterion") == "true");
  const auto& f = result("valfib", "FE2");
  CHECK(fact(f, "chain") == "true");
  const auto& z = result("valfib", "FZERO");
  CHECK(fact(z, "chain") == "false");
  CHECK(fact(z, "rho_injective") == "false");
  CHECK(fact(z, "sigma_injective") == "false");
  CHECK(fact(z, "criterion") == "false");
  const auto& id = result("valfib", "FID");
  CHECK(fact(id, "chain") == "true");
  for (const auto& r : theorem(default_run(), "valfib").results) CHECK(r.conclusion == true);
}

TEST_CASE("arithm-sur, wgldim-sur, semih-sur") {
  const auto& d = result("semih_sur", "DUP62");
  CHECK(d.hypothesis);
  CHECK(fact(d, "carrier") == "true");
  CHECK(fact(d, "A") == "true");
  CHECK(fact(d, "b_local_zero") == "true");
  CHECK(fact(d, "B_n_valuation_domain") == "true");
  CHECK(fact(d, "b_coherent") == "true");
  const auto& e2 = result("arithm_sur", "E2");
  CHECK_FALSE(e2.hypothesis);
  CHECK(e2.negative_control);
  CHECK(fact(e2, "carrier") == "true");
  CHECK(fact(e2, "b_local_zero") == "false");
  CHECK(result("arithm_sur", "DUP62").hypothesis);
  CHECK(result("wgldim_sur", "DUP62").conclusion == true);
}

TEST_CASE("finite embedding") {
  const auto& e2 = result("finite_embedding", "E2");
  CHECK(fact(e2, "generators") == "[1,1] [0,x]");
  CHECK(fact(e2, "span") == "4");
  const auto& m = amalg("E2");
  CHECK(brute_span(m, {{1, 1}, {0, m.B().element("x")}}) == 4);
  const auto& d = result("finite_embedding", "DUP62");
  CHECK(fact(d, "generators") == "[1,1] [0,2]");
  CHECK(fact(d, "span") == "18");
  CHECK(brute_span(amalg("DUP62"), {{1, 1}, {0, 2}}) == 18);
  CHECK(fact(result("finite_embedding", "DUP40"), "generators") == "[1,1]");
  CHECK(result("finite_embedding", "E2", "coherence").degenerate);
}

TEST_CASE("localization covers the zero-ring branch") {
  bool zero = false;
  for (const auto& r : theorem(default_run(), "localization").results)
    if (r.entry == "DUP62" && fact(r, "zero_branch") == "true") zero = true;
  CHECK(zero);
}

TEST_CASE("corrupted multiplication table is a construction failure") {
  auto c = catalog_from_text("(def Z2 (zmod 2))");
  auto z3 = mk_zmod(3);
  RawRingEntry raw{"BAD", z3.tables(), {"0", "1", "2"}};
  raw.tables.mul[2 * 3 + 2] = 2;  // 2*2 = 2 breaks distributivity
  c.raw.push_back(raw);
  RawRingEntry ok{"Z3RAW", z3.tables(), {"0", "1", "2"}};
  c.raw.push_back(ok);
  auto run = run_catalog(c);
  REQUIRE(run.built.errors.size() == 1);
  CHECK(run.built.errors[0].entry == "BAD");
  CHECK(run.built.errors[0].kind == SpecError::Kind::Build);
  CHECK_FALSE(run.syntax_errors());
  CHECK(run.failure_count() == 1);
  CHECK(run.table.find("Z3RAW") != nullptr);
}

TEST_CASE("empty catalog") {
  auto run = run_catalog(catalog_from_text(""));
  CHECK(run.failure_count() == 0);
  CHECK(run.table.order.empty());
}

TEST_CASE("theorem filter") {
  RunConfig cfg;
  cfg.theorems = {"valfib"};
  auto run = run_catalog(default_catalog(), cfg);
  REQUIRE(run.theorems.size() == 1);
  CHECK(run.theorems[0].theorem == "valfib");
  cfg.theorems = {"nope"};
  CHECK_THROWS_AS(run_catalog(default_catalog(), cfg), InvalidArgument);
}

TEST_CASE("expectation mismatch is a failure") {
  auto run = run_catalog(catalog_from_text("(def Z4 (zmod 4))\n(expect Z4 derived (P2_wgd_le_1 true))"));
  REQUIRE(run.expectations.size() == 1);
  CHECK_FALSE(run.expectations[0].ok());
  CHECK(run.failure_count() == 1);
}

TEST_CASE("reports are independent of the job count") {
  RunConfig one, four;
  four.jobs = 4;
  auto c = catalog_from_text("(def Z4 (zmod 4)) (def Z2 (zmod 2)) (def E1 (amalg Z4 Z2 (hom reduction) (ideal Z2 1)))"
                             " (def D (dup Z4 (ideal Z4 2)))");
  auto a = report::run_json(run_catalog(c, one), one, "t1").dump(2);
  auto b = report::run_json(run_catalog(c, four), one, "t2").dump(2);
  CHECK(a != b);
  CHECK(report::without_timestamp(a) == report::without_timestamp(b));
}

TEST_CASE("default catalog round trips through the grammar") {
  const auto& run = default_run();
  for (const auto& [id, ring] : run.built.rings()) {
    CAPTURE(id);
    auto again = evaluate_expression(ring.provenance(), nullptr);
    CHECK(again.ring == ring);
    CHECK(again.ring.tables().mul == ring.tables().mul);
  }
}
