#include "amalgam/isomorphism.hpp"

#include <algorithm>

#include "amalgam/constructors.hpp"
#include "amalgam/ideal.hpp"

namespace amalgam {

std::vector<ElementSignature> element_signatures(const Ring& r) {
  const std::size_t n = r.size();
  std::vector<ElementSignature> out(n);
  for (Elem x = 0; x < n; ++x) {
    auto& s = out[x];
    s.additive_order = additive_order(r, x);
    s.idempotent = r.mul(x, x) == x;
    Elem p = x;
    for (std::size_t k = 1; k <= n; ++k) {
      if (p == r.zero()) {
        s.nilpotency = k;
        break;
      }
      p = r.mul(p, x);
    }
    Subset row(n);
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = r.mul(x, y);
      if (xy == r.zero()) ++s.annihilator;
      if (xy == r.one()) s.unit = true;
      row.insert(xy);
    }
    s.principal = row.count();
  }
  return out;
}

std::vector<Elem> ring_generators(const Ring& r) {
  std::vector<Elem> gens;
  Subset closure = subring_closure(r, gens);
  while (closure.count() < r.size()) {
    const Elem next = *closure.complement().first();
    gens.push_back(next);
    closure = subring_closure(r, gens);
  }
  return gens;
}

namespace {

class Search {
 public:
  Search(const Ring& a, const Ring& b, const Budget& budget)
      : a_(a), b_(b), budget_(budget), sa_(element_signatures(a)), sb_(element_signatures(b)),
        map_(a.size(), -1), inv_(b.size(), -1) {}

  std::optional<std::vector<Elem>> run() {
    gens_ = ring_generators(a_);
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one()) || !propagate()) return std::nullopt;
    if (descend(0)) {
      std::vector<Elem> m(map_.begin(), map_.end());
      return m;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool assign(Elem x, Elem y) {
    if (map_[x] >= 0) return map_[x] == static_cast<long>(y);
    if (inv_[y] >= 0 || !(sa_[x] == sb_[y])) return false;
    map_[x] = y;
    inv_[y] = x;
    trail_.push_back(x);
    mapped_.push_back(x);
    return true;
  }

  // Extend the partial map to everything generated by the mapped elements.
  bool propagate() {
    while (cursor_ < mapped_.size()) {
      const Elem x = mapped_[cursor_++];
      for (std::size_t i = 0; i < cursor_; ++i) {
        const Elem y = mapped_[i];
        const Elem fx = static_cast<Elem>(map_[x]), fy = static_cast<Elem>(map_[y]);
        if (!assign(a_.add(x, y), b_.add(fx, fy))) return false;
        if (!assign(a_.mul(x, y), b_.mul(fx, fy))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t trail_size, std::size_t mapped_size, std::size_t cursor) {
    while (trail_.size() > trail_size) {
      const Elem x = trail_.back();
      trail_.pop_back();
      inv_[map_[x]] = -1;
      map_[x] = -1;
    }
    mapped_.resize(mapped_size);
    cursor_ = cursor;
  }

  bool descend(std::size_t g) {
    if (++nodes_ > budget_.iso_nodes)
      throw BudgetExceeded("isomorphism search exceeded " + std::to_string(budget_.iso_nodes) + " nodes");
    while (g < gens_.size() && map_[gens_[g]] >= 0) ++g;
    if (g == gens_.size()) return mapped_.size() == a_.size();
    const Elem x = gens_[g];
    for (Elem y = 0; y < b_.size(); ++y) {
      if (inv_[y] >= 0 || !(sa_[x] == sb_[y])) continue;
      const auto t = trail_.size(), m = mapped_.size(), c = cursor_;
      if (assign(x, y) && propagate() && descend(g + 1)) return true;
      undo(t, m, c);
    }
    return false;
  }

  const Ring& a_;
  const Ring& b_;
  const Budget& budget_;
  std::vector<ElementSignature> sa_, sb_;
  std::vector<long> map_, inv_;
  std::vector<Elem> trail_, mapped_;
  std::size_t cursor_ = 0;
  std::vector<Elem> gens_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IsoSearch find_isomorphism(const Ring& a, const Ring& b, const Budget& budget) {
  IsoSearch out;
  if (a.size() != b.size()) {
    out.reason = "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return out;
  }
  const auto ra = regularity_scan(a), rb = regularity_scan(b);
  if (ra.units.count() != rb.units.count()) {
    out.reason = "unit counts differ: " + std::to_string(ra.units.count()) + " vs " + std::to_string(rb.units.count());
    return out;
  }
  if (characteristic(a) != characteristic(b)) {
    out.reason = "characteristics differ: " + std::to_string(characteristic(a)) + " vs " +
                 std::to_string(characteristic(b));
    return out;
  }
  auto sa = element_signatures(a), sb = element_signatures(b);
  auto count_if = [](const std::vector<ElementSignature>& v, auto pred) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), pred));
  };
  auto nil = [](const ElementSignature& s) { return s.nilpotency > 0; };
  auto idem = [](const ElementSignature& s) { return s.idempotent; };
  if (count_if(sa, nil) != count_if(sb, nil)) {
    out.reason = "nilpotent counts differ";
    return out;
  }
  if (count_if(sa, idem) != count_if(sb, idem)) {
    out.reason = "idempotent counts differ";
    return out;
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    out.reason = "element signature multisets differ";
    return out;
  }
  Search search(a, b, budget);
  auto m = search.run();
  out.nodes = search.nodes();
  if (!m) {
    out.reason = "exhaustive search found no isomorphism";
    return out;
  }
  RingHom h = mk_hom(a, b, std::move(*m));
  enforce(h.bijective(), "isomorphism search produced a non-bijective map");
  out.iso = std::move(h);
  return out;
}

}  // namespace amalgam
