#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amalgam/kernels.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Ideal of a finite ring: a membership set together with a generating list.
class Ideal {
 public:
  Ideal() = default;

  /// Validates closure; generators are recovered greedily, smallest index first.
  static Ideal from_members(const Ring& r, Subset members);

  const Ring& ring() const { return ring_; }
  const Subset& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }

  bool contains(Elem e) const { return members_.contains(e); }
  std::size_t size() const { return members_.count(); }
  bool is_zero() const { return size() == 1; }
  bool is_unit() const { return size() == ring_.size(); }
  bool subset_of(const Ideal& o) const { return members_.subset_of(o.members_); }

  /// "(g1, g2)" using canonical element names.
  std::string describe() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  Ideal(Ring r, Subset m, std::vector<Elem> g)
      : ring_(std::move(r)), members_(std::move(m)), generators_(std::move(g)) {}
  friend Ideal ideal_generate(const Ring&, const std::vector<Elem>&);
  Ring ring_;
  Subset members_;
  std::vector<Elem> generators_;
};

/// Subgroup of (R, +) generated by the seeds.
Subset additive_closure(const Ring& r, const Subset& seeds);
bool is_ideal(const Ring& r, const Subset& s);

/// Smallest ideal containing gens; the supplied list is kept as generators.
Ideal ideal_generate(const Ring& r, const std::vector<Elem>& gens);
Ideal zero_ideal(const Ring& r);
Ideal unit_ideal(const Ring& r);
Ideal principal_ideal(const Ring& r, Elem x);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
/// (I : J) = {x : xJ ⊆ I}
Ideal ideal_colon(const Ideal& i, const Ideal& j);
Ideal annihilator(const Ring& r, Elem x);

struct IdealArith {
  Ideal sum;
  Ideal product;
  Ideal intersection;
  Ideal colon;
};
IdealArith ideal_arith(const Ideal& i, const Ideal& j);

Ideal kernel(const RingHom& h);
Ideal preimage(const RingHom& h, const Ideal& j);
/// Ideal of the target generated by h(I).
Ideal extension(const RingHom& h, const Ideal& i);

/// Every ideal exactly once, in canonical order (size, then member lists),
/// via closure of the principal ideals under pairwise sums.
std::vector<Ideal> all_ideals(const Ring& r, const Budget& budget = {});

/// Independent route: enumerate all additive subgroups, keep the ones closed
/// under ring multiplication. Exponential in general; meant for |R| <= 64.
std::vector<Ideal> ideals_by_subgroup_filter(const Ring& r, std::size_t max_size = 64);

struct RegularIdealTest {
  bool regular = false;
  std::optional<Elem> witness;
};
/// I ∩ Reg(R) ≠ ∅. Asserts the finite-ring law: regular iff I = R.
RegularIdealTest is_regular_ideal(const Ring& r, const Ideal& i);

struct PrimeTest {
  bool prime = false;
  /// For a proper non-prime ideal: a, b outside I with ab in I.
  std::optional<std::pair<Elem, Elem>> witness;
};
PrimeTest prime_test(const Ideal& i);

struct SpectrumView {
  Ring ring;
  std::vector<Ideal> primes;
  std::vector<Ideal> maximals;
  /// order[i][j] iff primes[i] ⊆ primes[j]
  std::vector<std::vector<char>> order;

  std::vector<Ideal> V(const Ideal& i) const;
  bool is_local() const { return maximals.size() == 1; }
};
/// Primes and maximals from the full lattice; asserts primes = maximals.
SpectrumView spectrum(const Ring& r, const Budget& budget = {});

struct Radicals {
  Ideal nilradical;
  Ideal jacobson;
};
Radicals radicals(const Ring& r, const Budget& budget = {});

Ideal content(const PolyOverRing& p);

struct ChainResult {
  bool chain = true;
  std::optional<std::pair<Ideal, Ideal>> incomparable;
};
ChainResult ideals_totally_ordered(const Ring& r, const Budget& budget = {});

/// All ideals of a ring with integer ids and lookup tables for lattice
/// operations. Ids follow the canonical order of all_ideals.
class IdealLattice {
 public:
  explicit IdealLattice(const Ring& r, const Budget& budget = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  int count() const { return static_cast<int>(ideals_.size()); }
  int id_of(const Subset& s) const;  // -1 if not an ideal
  int principal(Elem x) const { return principal_[x]; }
  int join(int i, int j) const { return join_[static_cast<std::size_t>(i) * count() + j]; }
  int meet(int i, int j) const;
  int product(int i, int j) const;
  int zero_id() const { return 0; }
  int unit_id() const { return count() - 1; }

  kernels::ContentTables content_tables() const;
  /// Full sum / product / meet / regularity tables for the census kernel.
  kernels::LatticeOps ops() const;

 private:
  Ring ring_;
  std::vector<Ideal> ideals_;
  std::unordered_map<Subset, int, SubsetHash> index_;
  std::vector<int> principal_;
  std::vector<int> join_;
};

}  // namespace amalgam
