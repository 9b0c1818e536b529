#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amalgam/budget.hpp"
#include "amalgam/error.hpp"
#include "amalgam/subset.hpp"

namespace amalgam {

namespace detail {
struct RingData;
}

/// Raw operation tables of a finite commutative ring, row-major size x size.
struct RingTables {
  std::size_t size = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 0;
};

/// Immutable handle to a validated finite commutative ring with identity.
///
/// Copies share the underlying tables. Two handles denote the same ring when
/// they point to the same data, or when provenance and tables coincide (equal
/// construction expressions give bit-identical rings).
class Ring {
 public:
  Ring() = default;

  std::size_t size() const;
  Elem zero() const;
  Elem one() const;
  bool is_zero_ring() const { return size() == 1; }

  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t k) const;
  /// k-fold sum of a.
  Elem scale(Elem a, std::size_t k) const;

  const std::string& name(Elem a) const;
  std::optional<Elem> find(std::string_view name) const;
  Elem element(std::string_view name) const;  // throws InvalidArgument

  const std::string& provenance() const;
  const RingTables& tables() const;

  /// Structural origin, used to resolve the named canonical homomorphisms.
  enum class Kind { ZMod, PolyQuot, TruncPoly, Product, Quotient, Subring, Localization, Amalgamation, Raw };
  Kind kind() const;
  const std::vector<Ring>& operands() const;
  /// zmod: {n}; polyquot: {degree}; truncpoly: {p, k, d}; quotient: the coset
  /// of each base element.
  const std::vector<long>& params() const;

  bool valid() const { return static_cast<bool>(d_); }
  const void* identity() const { return d_.get(); }

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  friend Ring make_ring(RingTables, std::vector<std::string>, std::string, Kind, std::vector<Ring>,
                        std::vector<long>, const Budget&);
  std::shared_ptr<const detail::RingData> d_;
};

/// Validate tables exhaustively and wrap them. Throws InvalidRing with the
/// first violated axiom, or BudgetExceeded.
Ring make_ring(RingTables tables, std::vector<std::string> names, std::string provenance,
               Ring::Kind kind = Ring::Kind::Raw, std::vector<Ring> operands = {},
               std::vector<long> params = {}, const Budget& budget = {});

/// Element bound to its ring. Arithmetic across different rings throws.
class Element {
 public:
  Element(Ring ring, Elem index);

  const Ring& ring() const { return ring_; }
  Elem index() const { return index_; }
  const std::string& name() const { return ring_.name(index_); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const { return Element(ring_, ring_.neg(index_)); }
  bool operator==(const Element& o) const;

 private:
  void check_same(const Element& o) const;
  Ring ring_;
  Elem index_;
};

/// Unital ring homomorphism, validated exhaustively at construction.
class RingHom {
 public:
  RingHom() = default;

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem a) const { return map_[a]; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  Subset image_set() const;

 private:
  friend RingHom mk_hom(const Ring&, const Ring&, std::vector<Elem>);
  RingHom(Ring s, Ring t, std::vector<Elem> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
  Ring source_;
  Ring target_;
  std::vector<Elem> map_;
};

/// Throws InvalidHom naming the first violated axiom and its witness.
RingHom mk_hom(const Ring& source, const Ring& target, std::vector<Elem> map);
RingHom identity_hom(const Ring& r);
RingHom compose(const RingHom& second, const RingHom& first);

struct Regularity {
  Subset units;
  Subset zerodivisors;
  Subset regular;
};

/// Partition of the carrier into units / zerodivisors. Asserts Reg(R) = units.
Regularity regularity_scan(const Ring& r);

std::optional<Elem> inverse(const Ring& r, Elem a);
bool is_nilpotent(const Ring& r, Elem a);
/// Additive order of a.
std::size_t additive_order(const Ring& r, Elem a);
std::size_t characteristic(const Ring& r);

}  // namespace amalgam
