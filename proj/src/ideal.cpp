#include "amalgam/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace amalgam {

namespace {

std::vector<Elem> greedy_generators(const Ring& r, const Subset& members) {
  std::vector<Elem> gens;
  Subset cur(r.size());
  cur.insert(r.zero());
  members.for_each([&](Elem x) {
    if (cur.contains(x)) return;
    gens.push_back(x);
    Subset seeds = cur;
    for (Elem y = 0; y < r.size(); ++y) seeds.insert(r.mul(x, y));
    cur = additive_closure(r, seeds);
  });
  return gens;
}

void check_budget(const Ring& r, const Budget& budget) {
  if (r.size() > budget.lattice_size)
    throw BudgetExceeded("ring of size " + std::to_string(r.size()) + " exceeds the lattice cap " +
                         std::to_string(budget.lattice_size) + ": " + r.provenance());
}

void require_same_ring(const Ideal& i, const Ideal& j) {
  if (!(i.ring() == j.ring())) throw InvalidArgument("ideals of different rings");
}

}  // namespace

Subset additive_closure(const Ring& r, const Subset& seeds) {
  Subset out(r.size());
  out.insert(r.zero());
  std::vector<Elem> queue{r.zero()};
  const std::vector<Elem> gens = seeds.elements();
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Elem g : gens) {
      const Elem s = r.add(queue[k], g);
      if (!out.contains(s)) {
        out.insert(s);
        queue.push_back(s);
      }
    }
  }
  return out;
}

bool is_ideal(const Ring& r, const Subset& s) {
  if (!s.contains(r.zero())) return false;
  const auto members = s.elements();
  for (Elem a : members) {
    for (Elem b : members)
      if (!s.contains(r.add(a, b))) return false;
    for (Elem x = 0; x < r.size(); ++x)
      if (!s.contains(r.mul(a, x))) return false;
  }
  return true;
}

Ideal Ideal::from_members(const Ring& r, Subset members) {
  if (members.universe() != r.size() || !is_ideal(r, members))
    throw InvalidArgument("subset is not an ideal of " + r.provenance());
  auto gens = greedy_generators(r, members);
  return Ideal(r, std::move(members), std::move(gens));
}

std::string Ideal::describe() const {
  std::string s = "(";
  if (generators_.empty()) s += ring_.name(ring_.zero());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += ring_.name(generators_[i]);
  }
  return s + ")";
}

Ideal ideal_generate(const Ring& r, const std::vector<Elem>& gens) {
  Subset seeds(r.size());
  for (Elem g : gens) {
    if (g >= r.size()) throw InvalidArgument("generator out of range");
    for (Elem x = 0; x < r.size(); ++x) seeds.insert(r.mul(g, x));
  }
  return Ideal(r, additive_closure(r, seeds), gens);
}

Ideal zero_ideal(const Ring& r) { return ideal_generate(r, {}); }
Ideal unit_ideal(const Ring& r) { return ideal_generate(r, {r.one()}); }
Ideal principal_ideal(const Ring& r, Elem x) { return ideal_generate(r, {x}); }

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const Ring& r = i.ring();
  Subset s(r.size());
  i.members().for_each([&](Elem a) { j.members().for_each([&](Elem b) { s.insert(r.add(a, b)); }); });
  return Ideal::from_members(r, std::move(s));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const Ring& r = i.ring();
  Subset seeds(r.size());
  i.members().for_each([&](Elem a) { j.members().for_each([&](Elem b) { seeds.insert(r.mul(a, b)); }); });
  return Ideal::from_members(r, additive_closure(r, seeds));
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  return Ideal::from_members(i.ring(), i.members() & j.members());
}

Ideal ideal_colon(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const Ring& r = i.ring();
  Subset s(r.size());
  const auto jm = j.members().elements();
  for (Elem x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (Elem y : jm)
      if (!i.contains(r.mul(x, y))) {
        ok = false;
        break;
      }
    if (ok) s.insert(x);
  }
  return Ideal::from_members(r, std::move(s));
}

Ideal annihilator(const Ring& r, Elem x) {
  Subset s(r.size());
  for (Elem y = 0; y < r.size(); ++y)
    if (r.mul(x, y) == r.zero()) s.insert(y);
  return Ideal::from_members(r, std::move(s));
}

IdealArith ideal_arith(const Ideal& i, const Ideal& j) {
  return {ideal_sum(i, j), ideal_product(i, j), ideal_intersection(i, j), ideal_colon(i, j)};
}

Ideal kernel(const RingHom& h) {
  Subset s(h.source().size());
  for (Elem a = 0; a < h.source().size(); ++a)
    if (h(a) == h.target().zero()) s.insert(a);
  return Ideal::from_members(h.source(), std::move(s));
}

Ideal preimage(const RingHom& h, const Ideal& j) {
  if (!(j.ring() == h.target())) throw InvalidArgument("ideal is not in the target ring");
  Subset s(h.source().size());
  for (Elem a = 0; a < h.source().size(); ++a)
    if (j.contains(h(a))) s.insert(a);
  return Ideal::from_members(h.source(), std::move(s));
}

Ideal extension(const RingHom& h, const Ideal& i) {
  if (!(i.ring() == h.source())) throw InvalidArgument("ideal is not in the source ring");
  std::vector<Elem> imgs;
  Subset seen(h.target().size());
  i.members().for_each([&](Elem a) {
    if (!seen.contains(h(a))) {
      seen.insert(h(a));
      imgs.push_back(h(a));
    }
  });
  return ideal_generate(h.target(), imgs);
}

std::vector<Ideal> all_ideals(const Ring& r, const Budget& budget) {
  check_budget(r, budget);
  std::vector<Subset> found;
  std::unordered_set<Subset, SubsetHash> seen;
  for (Elem x = 0; x < r.size(); ++x) {
    Subset s(r.size());
    for (Elem y = 0; y < r.size(); ++y) s.insert(r.mul(x, y));
    if (seen.insert(s).second) found.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].subset_of(found[j]) || found[j].subset_of(found[i])) continue;
      Subset s(r.size());
      const auto a = found[i].elements();
      found[j].for_each([&](Elem y) {
        for (Elem x : a) s.insert(r.add(x, y));
      });
      if (seen.insert(s).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) { return canonical_less(a, b); });
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Ideal::from_members(r, std::move(s)));
  return out;
}

std::vector<Ideal> ideals_by_subgroup_filter(const Ring& r, std::size_t max_size) {
  if (r.size() > max_size)
    throw BudgetExceeded("subgroup enumeration limited to rings of size " + std::to_string(max_size));
  const std::size_t n = r.size();
  std::vector<Subset> groups;
  std::unordered_set<Subset, SubsetHash> seen;
  Subset trivial(n);
  trivial.insert(r.zero());
  groups.push_back(trivial);
  seen.insert(trivial);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (Elem x = 0; x < n; ++x) {
      if (groups[k].contains(x)) continue;
      // H + <x>, grown coset by coset.
      Subset next = groups[k];
      std::vector<Elem> members = next.elements();
      Elem step = x;
      while (!next.contains(step)) {
        for (Elem h : members) next.insert(r.add(h, step));
        step = r.add(step, x);
      }
      if (seen.insert(next).second) groups.push_back(std::move(next));
    }
  }
  std::vector<Subset> kept;
  for (auto& g : groups) {
    bool closed = true;
    g.for_each([&](Elem h) {
      if (!closed) return;
      for (Elem y = 0; y < n && closed; ++y) closed = g.contains(r.mul(h, y));
    });
    if (closed) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), [](const Subset& a, const Subset& b) { return canonical_less(a, b); });
  std::vector<Ideal> out;
  for (auto& s : kept) out.push_back(Ideal::from_members(r, std::move(s)));
  return out;
}

RegularIdealTest is_regular_ideal(const Ring& r, const Ideal& i) {
  const auto reg = regularity_scan(r);
  RegularIdealTest out;
  auto hit = (i.members() & reg.regular).first();
  out.regular = hit.has_value();
  out.witness = hit;
  enforce(out.regular == i.is_unit(), "regular ideal differs from the unit ideal in " + r.provenance());
  return out;
}

PrimeTest prime_test(const Ideal& i) {
  const Ring& r = i.ring();
  PrimeTest out;
  if (i.is_unit()) return out;
  const auto outside = i.members().complement().elements();
  for (Elem a : outside)
    for (Elem b : outside)
      if (i.contains(r.mul(a, b))) {
        out.witness = std::make_pair(a, b);
        return out;
      }
  out.prime = true;
  return out;
}

std::vector<Ideal> SpectrumView::V(const Ideal& i) const {
  std::vector<Ideal> out;
  for (const auto& p : primes)
    if (i.subset_of(p)) out.push_back(p);
  return out;
}

SpectrumView spectrum(const Ring& r, const Budget& budget) {
  const auto ideals = all_ideals(r, budget);
  SpectrumView v;
  v.ring = r;
  for (const auto& i : ideals)
    if (prime_test(i).prime) v.primes.push_back(i);
  for (const auto& i : ideals) {
    if (i.is_unit()) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (!j.is_unit() && !(j == i) && i.subset_of(j)) {
        maximal = false;
        break;
      }
    if (maximal) v.maximals.push_back(i);
  }
  v.order.assign(v.primes.size(), std::vector<char>(v.primes.size(), 0));
  for (std::size_t a = 0; a < v.primes.size(); ++a)
    for (std::size_t b = 0; b < v.primes.size(); ++b) v.order[a][b] = v.primes[a].subset_of(v.primes[b]);
  enforce(v.primes.size() == v.maximals.size(), "a non-maximal prime in finite ring " + r.provenance());
  for (std::size_t k = 0; k < v.primes.size(); ++k)
    enforce(v.primes[k] == v.maximals[k], "primes and maximals differ in " + r.provenance());
  return v;
}

Radicals radicals(const Ring& r, const Budget& budget) {
  Subset nil(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    if (is_nilpotent(r, x)) nil.insert(x);
  const auto spec = spectrum(r, budget);
  Subset jac = Subset::full(r.size());
  for (const auto& m : spec.maximals) jac = jac & m.members();
  return {Ideal::from_members(r, std::move(nil)), Ideal::from_members(r, std::move(jac))};
}

Ideal content(const PolyOverRing& p) { return ideal_generate(p.ring(), p.coeffs()); }

ChainResult ideals_totally_ordered(const Ring& r, const Budget& budget) {
  const auto ideals = all_ideals(r, budget);
  ChainResult out;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      if (!ideals[i].subset_of(ideals[j]) && !ideals[j].subset_of(ideals[i])) {
        out.chain = false;
        out.incomparable = std::make_pair(ideals[i], ideals[j]);
        return out;
      }
  return out;
}

IdealLattice::IdealLattice(const Ring& r, const Budget& budget) : ring_(r), ideals_(all_ideals(r, budget)) {
  const int m = count();
  for (int k = 0; k < m; ++k) index_.emplace(ideals_[k].members(), k);
  principal_.resize(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    Subset s(r.size());
    for (Elem y = 0; y < r.size(); ++y) s.insert(r.mul(x, y));
    principal_[x] = index_.at(s);
  }
  // Ideals are sorted by size, so the first one containing both is the join.
  join_.assign(static_cast<std::size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const Subset u = ideals_[i].members() | ideals_[j].members();
      int found = -1;
      for (int k = j; k < m; ++k)
        if (u.subset_of(ideals_[k].members())) {
          found = k;
          break;
        }
      join_[static_cast<std::size_t>(i) * m + j] = found;
      join_[static_cast<std::size_t>(j) * m + i] = found;
    }
  }
}

int IdealLattice::id_of(const Subset& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int IdealLattice::meet(int i, int j) const { return index_.at(ideals_[i].members() & ideals_[j].members()); }

int IdealLattice::product(int i, int j) const {
  int acc = zero_id();
  for (Elem g : ideals_[i].generators())
    for (Elem h : ideals_[j].generators()) acc = join(acc, principal(ring_.mul(g, h)));
  return acc;
}

kernels::ContentTables IdealLattice::content_tables() const {
  kernels::ContentTables t;
  t.n = ring_.size();
  t.add = ring_.tables().add.data();
  t.mul = ring_.tables().mul.data();
  t.zero = ring_.zero();
  t.ideal_count = count();
  t.zero_ideal = zero_id();
  t.principal = principal_;
  t.join = join_;
  return t;
}

kernels::LatticeOps IdealLattice::ops() const {
  kernels::LatticeOps o;
  const int m = count();
  o.m = m;
  o.sum = join_;
  o.product.resize(static_cast<std::size_t>(m) * m);
  o.meet.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const int p = product(i, j);
      const int q = meet(i, j);
      o.product[static_cast<std::size_t>(i) * m + j] = o.product[static_cast<std::size_t>(j) * m + i] = p;
      o.meet[static_cast<std::size_t>(i) * m + j] = o.meet[static_cast<std::size_t>(j) * m + i] = q;
    }
  const auto reg = regularity_scan(ring_);
  o.regular.resize(m);
  for (int i = 0; i < m; ++i) o.regular[i] = ideals_[i].members().intersects(reg.regular);
  return o;
}

}  // namespace amalgam
