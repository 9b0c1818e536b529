#include "amalgam/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>

namespace amalgam::kernels {

namespace {

std::string triple(const char* law, std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << law << " fails at (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::optional<std::string> unary_checks(const RingTables& t) {
  const std::size_t n = t.size;
  if (n == 0) return "empty carrier";
  if (t.add.size() != n * n || t.mul.size() != n * n) return "table dimensions do not match size";
  if (t.zero >= n || t.one >= n) return "zero or one out of range";
  for (std::size_t i = 0; i < n * n; ++i)
    if (t.add[i] >= n || t.mul[i] >= n) return "table entry out of range";
  if (n > 1 && t.zero == t.one) return "zero equals one in a nonzero ring";
  for (std::size_t a = 0; a < n; ++a) {
    if (t.add[a * n + t.zero] != a) return "zero is not an additive identity for " + std::to_string(a);
    if (t.mul[a * n + t.one] != a) return "one is not a multiplicative identity for " + std::to_string(a);
    bool has_neg = false;
    for (std::size_t b = 0; b < n && !has_neg; ++b) has_neg = t.add[a * n + b] == t.zero;
    if (!has_neg) return "no additive inverse for " + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (t.add[a * n + b] != t.add[b * n + a])
        return "addition not commutative at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
      if (t.mul[a * n + b] != t.mul[b * n + a])
        return "multiplication not commutative at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
    }
  }
  return std::nullopt;
}

// Ternary laws for a fixed first argument a. Returns the first failing b, c.
std::optional<std::string> ternary_row(const RingTables& t, std::size_t a) {
  const std::size_t n = t.size;
  const Elem* add = t.add.data();
  const Elem* mul = t.mul.data();
  for (std::size_t b = 0; b < n; ++b) {
    const Elem ab_add = add[a * n + b];
    const Elem ab_mul = mul[a * n + b];
    for (std::size_t c = 0; c < n; ++c) {
      if (add[ab_add * n + c] != add[a * n + add[b * n + c]])
        return triple("additive associativity", a, b, c);
      if (mul[ab_mul * n + c] != mul[a * n + mul[b * n + c]])
        return triple("multiplicative associativity", a, b, c);
      if (mul[a * n + add[b * n + c]] != add[ab_mul * n + mul[a * n + c]])
        return triple("distributivity", a, b, c);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> ring_axioms_serial(const RingTables& t) {
  if (auto e = unary_checks(t)) return e;
  for (std::size_t a = 0; a < t.size; ++a)
    if (auto e = ternary_row(t, a)) return e;
  return std::nullopt;
}

std::optional<std::string> ring_axioms_parallel(const RingTables& t) {
  if (auto e = unary_checks(t)) return e;
  const long n = static_cast<long>(t.size);
  std::atomic<long> first_bad{n};
#pragma omp parallel for schedule(dynamic, 1)
  for (long a = 0; a < n; ++a) {
    if (a > first_bad.load(std::memory_order_relaxed)) continue;
    if (ternary_row(t, static_cast<std::size_t>(a))) {
      long cur = first_bad.load();
      while (a < cur && !first_bad.compare_exchange_weak(cur, a)) {
      }
    }
  }
  if (first_bad.load() < n) return ternary_row(t, static_cast<std::size_t>(first_bad.load()));
  return std::nullopt;
}

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(base, 1))
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

void decode(std::uint64_t index, std::size_t n, std::vector<Elem>& out) {
  for (auto& c : out) {
    c = static_cast<Elem>(index % n);
    index /= n;
  }
}

int content_of(const ContentTables& t, const Elem* coeffs, std::size_t len) {
  int id = t.zero_ideal;
  for (std::size_t i = 0; i < len; ++i)
    id = t.join[static_cast<std::size_t>(id) * t.ideal_count + t.principal[coeffs[i]]];
  return id;
}

// Returns true if c(pg) == c(p)c(g); fills the two ideal ids.
bool gauss_pair(const ContentTables& t, const std::vector<Elem>& p, const std::vector<Elem>& g,
                std::vector<Elem>& prod, int& c_pg, int& c_prod) {
  const std::size_t n = t.n;
  std::fill(prod.begin(), prod.end(), t.zero);
  int pc = t.zero_ideal;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == t.zero) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Elem term = t.mul[p[i] * n + g[j]];
      prod[i + j] = t.add[prod[i + j] * n + term];
      pc = t.join[static_cast<std::size_t>(pc) * t.ideal_count + t.principal[term]];
    }
  }
  c_prod = pc;
  c_pg = content_of(t, prod.data(), prod.size());
  return c_pg == c_prod;
}

struct Range {
  std::uint64_t p_count;
  std::uint64_t g_count;
  std::uint64_t p_limit;
};

Range make_range(const ContentTables& t, const GaussSearch& s) {
  Range r;
  r.p_count = ipow(t.n, s.p_degree + 1);
  r.g_count = ipow(t.n, s.g_degree + 1);
  r.p_limit = r.p_count;
  if (s.max_pairs != 0) {
    const std::uint64_t lim = (s.max_pairs + r.g_count - 1) / r.g_count;
    r.p_limit = std::min(r.p_count, lim);
  }
  return r;
}

// Scans every g for one p; returns the first failing g index or nullopt.
std::optional<std::uint64_t> scan_g(const ContentTables& t, const std::vector<Elem>& p,
                                    unsigned g_degree, std::uint64_t g_count, GaussFailure* out) {
  std::vector<Elem> g(g_degree + 1);
  std::vector<Elem> prod(p.size() + g.size() - 1);
  int c_pg = 0, c_prod = 0;
  for (std::uint64_t gi = 0; gi < g_count; ++gi) {
    decode(gi, t.n, g);
    if (!gauss_pair(t, p, g, prod, c_pg, c_prod)) {
      if (out) *out = GaussFailure{p, g, c_pg, c_prod};
      return gi;
    }
  }
  return std::nullopt;
}

}  // namespace

GaussOutcome gauss_search_serial(const ContentTables& t, const GaussSearch& s) {
  const Range r = make_range(t, s);
  std::vector<Elem> p(s.p_degree + 1);
  GaussOutcome out;
  for (std::uint64_t pi = 0; pi < r.p_limit; ++pi) {
    decode(pi, t.n, p);
    GaussFailure f;
    if (auto gi = scan_g(t, p, s.g_degree, r.g_count, &f)) {
      out.pairs = pi * r.g_count + *gi + 1;
      out.complete = true;
      out.failure = std::move(f);
      return out;
    }
  }
  out.pairs = r.p_limit * r.g_count;
  out.complete = r.p_limit == r.p_count;
  return out;
}

GaussOutcome gauss_search_parallel(const ContentTables& t, const GaussSearch& s) {
  const Range r = make_range(t, s);
  const auto none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first_p{none};
  const long limit = static_cast<long>(r.p_limit);
#pragma omp parallel
  {
    std::vector<Elem> p(s.p_degree + 1);
#pragma omp for schedule(dynamic, 16)
    for (long pl = 0; pl < limit; ++pl) {
      const auto pi = static_cast<std::uint64_t>(pl);
      if (pi > first_p.load(std::memory_order_relaxed)) continue;
      decode(pi, t.n, p);
      if (scan_g(t, p, s.g_degree, r.g_count, nullptr)) {
        auto cur = first_p.load();
        while (pi < cur && !first_p.compare_exchange_weak(cur, pi)) {
        }
      }
    }
  }
  GaussOutcome out;
  if (first_p.load() != none) {
    std::vector<Elem> p(s.p_degree + 1);
    decode(first_p.load(), t.n, p);
    GaussFailure f;
    auto gi = scan_g(t, p, s.g_degree, r.g_count, &f);
    out.pairs = first_p.load() * r.g_count + *gi + 1;
    out.complete = true;
    out.failure = std::move(f);
    return out;
  }
  out.pairs = r.p_limit * r.g_count;
  out.complete = r.p_limit == r.p_count;
  return out;
}

GaussOutcome gauss_polynomial_serial(const ContentTables& t, const std::vector<Elem>& p,
                                     unsigned g_degree) {
  const std::uint64_t g_count = ipow(t.n, g_degree + 1);
  GaussOutcome out;
  GaussFailure f;
  if (auto gi = scan_g(t, p, g_degree, g_count, &f)) {
    out.pairs = *gi + 1;
    out.failure = std::move(f);
  } else {
    out.pairs = g_count;
  }
  out.complete = true;
  return out;
}

GaussOutcome gauss_polynomial_parallel(const ContentTables& t, const std::vector<Elem>& p,
                                       unsigned g_degree) {
  const std::uint64_t g_count = ipow(t.n, g_degree + 1);
  const auto none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first_g{none};
  const long count = static_cast<long>(g_count);
#pragma omp parallel
  {
    std::vector<Elem> g(g_degree + 1);
    std::vector<Elem> prod(p.size() + g.size() - 1);
    int c_pg = 0, c_prod = 0;
#pragma omp for schedule(static)
    for (long gl = 0; gl < count; ++gl) {
      const auto gi = static_cast<std::uint64_t>(gl);
      if (gi > first_g.load(std::memory_order_relaxed)) continue;
      decode(gi, t.n, g);
      if (!gauss_pair(t, p, g, prod, c_pg, c_prod)) {
        auto cur = first_g.load();
        while (gi < cur && !first_g.compare_exchange_weak(cur, gi)) {
        }
      }
    }
  }
  GaussOutcome out;
  out.complete = true;
  if (first_g.load() == none) {
    out.pairs = g_count;
    return out;
  }
  std::vector<Elem> g(g_degree + 1);
  std::vector<Elem> prod(p.size() + g.size() - 1);
  decode(first_g.load(), t.n, g);
  int c_pg = 0, c_prod = 0;
  gauss_pair(t, p, g, prod, c_pg, c_prod);
  out.pairs = first_g.load() + 1;
  out.failure = GaussFailure{p, g, c_pg, c_prod};
  return out;
}

namespace {

struct RowCensus {
  std::uint64_t product_violations = 0;
  std::optional<std::array<int, 3>> product_witness;
  std::uint64_t lattice_violations = 0;
  std::optional<std::array<int, 3>> lattice_witness;
};

RowCensus census_row(const LatticeOps& ops, bool regular_only, int a) {
  const int m = ops.m;
  auto at = [m](const std::vector<int>& tab, int i, int j) {
    return tab[static_cast<std::size_t>(i) * m + j];
  };
  RowCensus r;
  for (int b = 0; b < m; ++b) {
    for (int c = 0; c < m; ++c) {
      if (!regular_only || ops.regular[b] || ops.regular[c]) {
        const int lhs = at(ops.product, a, at(ops.meet, b, c));
        const int rhs = at(ops.meet, at(ops.product, a, b), at(ops.product, a, c));
        if (lhs != rhs) {
          if (!r.product_witness) r.product_witness = std::array<int, 3>{a, b, c};
          ++r.product_violations;
        }
      }
      const int lhs = at(ops.meet, a, at(ops.sum, b, c));
      const int rhs = at(ops.sum, at(ops.meet, a, b), at(ops.meet, a, c));
      if (lhs != rhs) {
        if (!r.lattice_witness) r.lattice_witness = std::array<int, 3>{a, b, c};
        ++r.lattice_violations;
      }
    }
  }
  return r;
}

void merge(CensusOutcome& out, const RowCensus& r) {
  out.product_violations += r.product_violations;
  out.lattice_violations += r.lattice_violations;
  if (!out.product_witness) out.product_witness = r.product_witness;
  if (!out.lattice_witness) out.lattice_witness = r.lattice_witness;
}

}  // namespace

CensusOutcome census_serial(const LatticeOps& ops, bool regular_only) {
  CensusOutcome out;
  out.triples = static_cast<std::uint64_t>(ops.m) * ops.m * ops.m;
  for (int a = 0; a < ops.m; ++a) merge(out, census_row(ops, regular_only, a));
  return out;
}

CensusOutcome census_parallel(const LatticeOps& ops, bool regular_only) {
  std::vector<RowCensus> rows(static_cast<std::size_t>(ops.m));
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 0; a < ops.m; ++a) rows[a] = census_row(ops, regular_only, a);
  CensusOutcome out;
  out.triples = static_cast<std::uint64_t>(ops.m) * ops.m * ops.m;
  for (const auto& r : rows) merge(out, r);
  return out;
}

}  // namespace amalgam::kernels
