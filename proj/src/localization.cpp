#include "amalgam/localization.hpp"

#include <algorithm>

namespace amalgam {

MultiplicativeSet::MultiplicativeSet(Ring ring, Subset members) : ring_(std::move(ring)), members_(std::move(members)) {
  if (members_.universe() != ring_.size()) throw InvalidArgument("multiplicative set over the wrong ring");
  if (!members_.contains(ring_.one())) throw InvalidArgument("multiplicative set must contain 1");
  const auto m = members_.elements();
  for (Elem a : m)
    for (Elem b : m)
      if (!members_.contains(ring_.mul(a, b)))
        throw InvalidArgument("multiplicative set not closed at (" + ring_.name(a) + ", " + ring_.name(b) + ")");
}

MultiplicativeSet MultiplicativeSet::generated_by(const Ring& r, const std::vector<Elem>& gens) {
  Subset s(r.size());
  s.insert(r.one());
  std::vector<Elem> list{r.one()};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem g : gens) {
      const Elem p = r.mul(list[i], g);
      if (!s.contains(p)) {
        s.insert(p);
        list.push_back(p);
      }
    }
  return MultiplicativeSet(r, std::move(s));
}

MultiplicativeSet MultiplicativeSet::complement_of(const Ideal& prime) {
  return MultiplicativeSet(prime.ring(), prime.members().complement());
}

MultiplicativeSet MultiplicativeSet::units_of(const Ring& r) { return MultiplicativeSet(r, regularity_scan(r).units); }

MultiplicativeSet MultiplicativeSet::regular_of(const Ring& r) {
  return MultiplicativeSet(r, regularity_scan(r).regular);
}

std::string MultiplicativeSet::describe() const {
  std::string s = "{";
  bool first = true;
  members_.for_each([&](Elem e) {
    if (!first) s += ", ";
    first = false;
    s += ring_.name(e);
  });
  return s + "}";
}

Elem LocalizedRing::fraction(Elem a, Elem s) const {
  auto it = std::lower_bound(set_members.begin(), set_members.end(), s);
  if (it == set_members.end() || *it != s) throw InvalidArgument("denominator not in the multiplicative set");
  return class_of[a * set_members.size() + static_cast<std::size_t>(it - set_members.begin())];
}

LocalizedRing localize(const Ring& r, const MultiplicativeSet& set, const Budget& budget) {
  if (!(set.ring() == r)) throw InvalidArgument("multiplicative set belongs to a different ring");
  const std::size_t n = r.size();
  const auto members = set.members().elements();
  const std::size_t ns = members.size();
  std::vector<int> member_index(n, -1);
  for (std::size_t k = 0; k < ns; ++k) member_index[members[k]] = static_cast<int>(k);

  Subset torsion(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem u : members)
      if (r.mul(u, x) == r.zero()) {
        torsion.insert(x);
        break;
      }

  // (a, s) ~ (a', s') iff u(as' - a's) = 0 for some u in S, i.e. as' - a's is torsion.
  auto related = [&](Elem a, Elem s, Elem a2, Elem s2) { return torsion.contains(r.sub(r.mul(a, s2), r.mul(a2, s))); };

  std::vector<std::pair<Elem, Elem>> reps;
  std::vector<Elem> class_of(n * ns);
  for (Elem a = 0; a < n; ++a)
    for (std::size_t k = 0; k < ns; ++k) {
      const Elem s = members[k];
      int found = -1;
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (!related(a, s, reps[c].first, reps[c].second)) continue;
        enforce(found < 0, "fraction relation is not transitive on " + r.provenance());
        found = static_cast<int>(c);
      }
      if (found < 0) {
        found = static_cast<int>(reps.size());
        reps.emplace_back(a, s);
      }
      class_of[a * ns + k] = static_cast<Elem>(found);
    }

  const std::size_t q = reps.size();
  auto cls = [&](Elem a, Elem s) { return class_of[a * ns + static_cast<std::size_t>(member_index[s])]; };
  RingTables t;
  t.size = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      const auto [a, s] = reps[x];
      const auto [b, u] = reps[y];
      const Elem su = r.mul(s, u);
      t.add[x * q + y] = cls(r.add(r.mul(a, u), r.mul(b, s)), su);
      t.mul[x * q + y] = cls(r.mul(a, b), su);
    }
  t.zero = cls(r.zero(), r.one());
  t.one = cls(r.one(), r.one());
  std::vector<std::string> names;
  for (const auto& [a, s] : reps) names.push_back(r.name(a) + "/" + r.name(s));

  Ring carrier = make_ring(std::move(t), std::move(names), "(localize " + r.provenance() + " " + set.describe() + ")",
                           Ring::Kind::Localization, {r}, {}, budget);
  std::vector<Elem> canon(n);
  for (Elem a = 0; a < n; ++a) canon[a] = cls(a, r.one());
  RingHom hom = mk_hom(r, carrier, std::move(canon));

  enforce((carrier.size() == 1) == set.contains(r.zero()),
          "zero-ring criterion for localization fails on " + r.provenance());
  enforce(kernel(hom).members() == torsion, "localization kernel differs from the S-torsion on " + r.provenance());

  return LocalizedRing{r, set, carrier, hom, members, std::move(class_of), std::move(reps), std::move(torsion)};
}

LocalizedRing localize_at(const Ideal& prime, const Budget& budget) {
  return localize(prime.ring(), MultiplicativeSet::complement_of(prime), budget);
}

LocalizedRing total_quotient_ring(const Ring& r, const Budget& budget) {
  auto out = localize(r, MultiplicativeSet::regular_of(r), budget);
  enforce(out.canonical.bijective(), "canonical map to Tot(R) is not an isomorphism for " + r.provenance());
  return out;
}

}  // namespace amalgam
