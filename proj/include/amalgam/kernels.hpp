#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a plain
// serial reference with identical, schedule-independent results; the tests
// compare the two and the benchmark target times them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam::kernels {

/// First violated commutative-ring axiom, in a fixed scan order, or nullopt.
std::optional<std::string> ring_axioms_serial(const RingTables& t);
std::optional<std::string> ring_axioms_parallel(const RingTables& t);

/// Lookup tables that turn content ideals into integer folds: every ideal of
/// the ring has an id, `principal[x]` is the id of xR, `join[i*m+j]` the id of
/// the sum of ideals i and j.
struct ContentTables {
  std::size_t n = 0;
  const Elem* add = nullptr;
  const Elem* mul = nullptr;
  Elem zero = 0;
  int ideal_count = 0;
  int zero_ideal = 0;
  std::vector<int> principal;
  std::vector<int> join;
};

struct GaussSearch {
  unsigned p_degree = 2;   // enumerate every p with deg p <= p_degree
  unsigned g_degree = 2;   // and every g with deg g <= g_degree
  std::uint64_t max_pairs = 0;  // 0 = unlimited
};

struct GaussFailure {
  std::vector<Elem> p;  // coefficients, least significant first, untrimmed
  std::vector<Elem> g;
  int content_pg = 0;       // ideal id of c(pg)
  int content_product = 0;  // ideal id of c(p)c(g)
};

struct GaussOutcome {
  /// Pairs examined in sequential order up to and including the failure.
  std::uint64_t pairs = 0;
  /// True when the whole (p, g) range was examined, or a failure was found.
  bool complete = false;
  std::optional<GaussFailure> failure;
};

/// Bounded search for (p, g) with c(pg) != c(p)c(g). Polynomials are visited
/// in little-endian coefficient-index order; the reported failure is the first
/// one in that order.
GaussOutcome gauss_search_serial(const ContentTables& t, const GaussSearch& s);
GaussOutcome gauss_search_parallel(const ContentTables& t, const GaussSearch& s);

/// Same check for one fixed p against every g with deg g <= g_degree.
GaussOutcome gauss_polynomial_serial(const ContentTables& t, const std::vector<Elem>& p,
                                     unsigned g_degree);
GaussOutcome gauss_polynomial_parallel(const ContentTables& t, const std::vector<Elem>& p,
                                       unsigned g_degree);

/// Ideal-lattice operation tables indexed by ideal id (m ideals).
struct LatticeOps {
  int m = 0;
  std::vector<int> sum;
  std::vector<int> product;
  std::vector<int> meet;
  std::vector<char> regular;
};

struct CensusOutcome {
  std::uint64_t triples = 0;
  /// a(b ∩ c) = ab ∩ ac
  std::uint64_t product_violations = 0;
  std::optional<std::array<int, 3>> product_witness;
  /// a ∩ (b + c) = (a ∩ b) + (a ∩ c)
  std::uint64_t lattice_violations = 0;
  std::optional<std::array<int, 3>> lattice_witness;
};

/// Scan every ideal triple (a, b, c). With `regular_only`, the product
/// identity is only tested where b or c is regular; the lattice law is always
/// tested. Witnesses are the first violating triple in (a, b, c) order.
CensusOutcome census_serial(const LatticeOps& ops, bool regular_only);
CensusOutcome census_parallel(const LatticeOps& ops, bool regular_only);

}  // namespace amalgam::kernels
