#include "amalgam/ring.hpp"

#include <sstream>

#include "amalgam/kernels.hpp"

namespace amalgam {

namespace detail {
struct RingData {
  RingTables t;
  std::vector<Elem> neg;
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> by_name;
  std::string provenance;
  Ring::Kind kind = Ring::Kind::Raw;
  std::vector<Ring> operands;
  std::vector<long> params;
};
}  // namespace detail

std::size_t Ring::size() const { return d_->t.size; }
Elem Ring::zero() const { return d_->t.zero; }
Elem Ring::one() const { return d_->t.one; }
Elem Ring::add(Elem a, Elem b) const { return d_->t.add[a * d_->t.size + b]; }
Elem Ring::mul(Elem a, Elem b) const { return d_->t.mul[a * d_->t.size + b]; }
Elem Ring::neg(Elem a) const { return d_->neg[a]; }

Elem Ring::pow(Elem a, std::size_t k) const {
  Elem r = one();
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Elem Ring::scale(Elem a, std::size_t k) const {
  Elem r = zero();
  for (std::size_t i = 0; i < k; ++i) r = add(r, a);
  return r;
}

const std::string& Ring::name(Elem a) const { return d_->names[a]; }

std::optional<Elem> Ring::find(std::string_view name) const {
  auto it = d_->by_name.find(std::string(name));
  if (it == d_->by_name.end()) return std::nullopt;
  return it->second;
}

Elem Ring::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InvalidArgument("no element named '" + std::string(name) + "' in " + provenance());
}

const std::string& Ring::provenance() const { return d_->provenance; }
const RingTables& Ring::tables() const { return d_->t; }
Ring::Kind Ring::kind() const { return d_->kind; }
const std::vector<Ring>& Ring::operands() const { return d_->operands; }
const std::vector<long>& Ring::params() const { return d_->params; }

bool operator==(const Ring& a, const Ring& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->provenance == b.d_->provenance && a.d_->t.add == b.d_->t.add &&
         a.d_->t.mul == b.d_->t.mul && a.d_->t.zero == b.d_->t.zero && a.d_->t.one == b.d_->t.one;
}

Ring make_ring(RingTables tables, std::vector<std::string> names, std::string provenance,
               Ring::Kind kind, std::vector<Ring> operands, std::vector<long> params,
               const Budget& budget) {
  if (tables.size > budget.ring_size)
    throw BudgetExceeded("ring of size " + std::to_string(tables.size) + " exceeds cap " +
                         std::to_string(budget.ring_size) + ": " + provenance);
  if (auto bad = kernels::ring_axioms_parallel(tables)) throw InvalidRing(*bad + " in " + provenance);
  if (names.size() != tables.size) throw InvalidRing("name count does not match size in " + provenance);

  auto d = std::make_shared<detail::RingData>();
  const std::size_t n = tables.size;
  d->neg.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (tables.add[a * n + b] == tables.zero) {
        d->neg[a] = static_cast<Elem>(b);
        break;
      }
  for (std::size_t i = 0; i < n; ++i) {
    if (names[i].empty()) throw InvalidRing("empty element name in " + provenance);
    if (!d->by_name.emplace(names[i], static_cast<Elem>(i)).second)
      throw InvalidRing("duplicate element name '" + names[i] + "' in " + provenance);
  }
  d->t = std::move(tables);
  d->names = std::move(names);
  d->provenance = std::move(provenance);
  d->kind = kind;
  d->operands = std::move(operands);
  d->params = std::move(params);
  Ring r;
  r.d_ = std::move(d);
  return r;
}

Element::Element(Ring ring, Elem index) : ring_(std::move(ring)), index_(index) {
  if (index_ >= ring_.size()) throw InvalidArgument("element index out of range");
}

void Element::check_same(const Element& o) const {
  if (ring_.identity() != o.ring_.identity() && !(ring_ == o.ring_))
    throw InvalidArgument("arithmetic across different rings");
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  return Element(ring_, ring_.add(index_, o.index_));
}
Element Element::operator-(const Element& o) const {
  check_same(o);
  return Element(ring_, ring_.sub(index_, o.index_));
}
Element Element::operator*(const Element& o) const {
  check_same(o);
  return Element(ring_, ring_.mul(index_, o.index_));
}
bool Element::operator==(const Element& o) const {
  check_same(o);
  return index_ == o.index_;
}

bool RingHom::injective() const {
  std::vector<char> seen(target_.size(), 0);
  for (Elem y : map_) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool RingHom::surjective() const { return image_set().count() == target_.size(); }

Subset RingHom::image_set() const {
  Subset s(target_.size());
  for (Elem y : map_) s.insert(y);
  return s;
}

RingHom mk_hom(const Ring& source, const Ring& target, std::vector<Elem> map) {
  const std::size_t n = source.size();
  if (map.size() != n) throw InvalidHom("map is not total on the source");
  for (Elem y : map)
    if (y >= target.size()) throw InvalidHom("map value out of range of the target");
  auto nm = [&](const Ring& r, Elem e) { return r.name(e); };
  if (map[source.zero()] != target.zero())
    throw InvalidHom("f(0) = " + nm(target, map[source.zero()]) + " is not zero");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (map[source.add(a, b)] != target.add(map[a], map[b]))
        throw InvalidHom("addition not preserved at (" + nm(source, a) + ", " + nm(source, b) +
                         "): f(a+b) = " + nm(target, map[source.add(a, b)]) + " but f(a)+f(b) = " +
                         nm(target, target.add(map[a], map[b])));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw InvalidHom("multiplication not preserved at (" + nm(source, a) + ", " + nm(source, b) +
                         "): f(a*b) = " + nm(target, map[source.mul(a, b)]) + " but f(a)*f(b) = " +
                         nm(target, target.mul(map[a], map[b])));
  if (map[source.one()] != target.one())
    throw InvalidHom("f(1) = " + nm(target, map[source.one()]) + " is not one");
  return RingHom(source, target, std::move(map));
}

RingHom identity_hom(const Ring& r) {
  std::vector<Elem> m(r.size());
  for (Elem i = 0; i < r.size(); ++i) m[i] = i;
  return mk_hom(r, r, std::move(m));
}

RingHom compose(const RingHom& second, const RingHom& first) {
  if (!(first.target() == second.source())) throw InvalidHom("composition across mismatched rings");
  std::vector<Elem> m(first.source().size());
  for (Elem i = 0; i < m.size(); ++i) m[i] = second(first(i));
  return mk_hom(first.source(), second.target(), std::move(m));
}

std::optional<Elem> inverse(const Ring& r, Elem a) {
  for (Elem b = 0; b < r.size(); ++b)
    if (r.mul(a, b) == r.one()) return b;
  return std::nullopt;
}

bool is_nilpotent(const Ring& r, Elem a) {
  Elem x = a;
  for (std::size_t k = 0; k <= r.size(); ++k) {
    if (x == r.zero()) return true;
    x = r.mul(x, a);
  }
  return false;
}

std::size_t additive_order(const Ring& r, Elem a) {
  Elem x = a;
  std::size_t k = 1;
  while (x != r.zero()) {
    x = r.add(x, a);
    ++k;
  }
  return k;
}

std::size_t characteristic(const Ring& r) { return additive_order(r, r.one()); }

Regularity regularity_scan(const Ring& r) {
  const std::size_t n = r.size();
  Regularity out{Subset(n), Subset(n), Subset(n)};
  for (Elem a = 0; a < n; ++a) {
    bool unit = false, zd = false;
    for (Elem b = 0; b < n; ++b) {
      const Elem p = r.mul(a, b);
      if (p == r.one()) unit = true;
      if (p == r.zero() && b != r.zero()) zd = true;
    }
    if (unit) out.units.insert(a);
    if (zd) out.zerodivisors.insert(a);
    else out.regular.insert(a);
  }
  enforce(out.regular == out.units,
          "regular elements differ from units in finite ring " + r.provenance());
  return out;
}

}  // namespace amalgam
