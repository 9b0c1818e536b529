#pragma once

#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Multiplicatively closed subset containing 1.
class MultiplicativeSet {
 public:
  /// Validates that the set contains 1 and is closed under multiplication.
  MultiplicativeSet(Ring ring, Subset members);

  /// Submonoid generated by the given elements.
  static MultiplicativeSet generated_by(const Ring& r, const std::vector<Elem>& gens);
  /// R \ P for a prime P.
  static MultiplicativeSet complement_of(const Ideal& prime);
  static MultiplicativeSet units_of(const Ring& r);
  static MultiplicativeSet regular_of(const Ring& r);

  const Ring& ring() const { return ring_; }
  const Subset& members() const { return members_; }
  bool contains(Elem e) const { return members_.contains(e); }
  std::string describe() const;

 private:
  Ring ring_;
  Subset members_;
};

/// Ring of fractions R_S built from raw fraction classes.
///
/// Pairs (a, s) are visited in order of a*|S| + k, where s is the k-th member
/// of S; each class is represented by its first pair and named "a/s".
struct LocalizedRing {
  Ring base;
  MultiplicativeSet set;
  Ring carrier;
  RingHom canonical;
  std::vector<Elem> set_members;  // S in ascending order
  std::vector<Elem> class_of;     // index a*|S| + k -> carrier element
  std::vector<std::pair<Elem, Elem>> representative;  // carrier element -> (a, s)
  /// {a : ua = 0 for some u in S}
  Subset torsion;

  Elem fraction(Elem a, Elem s) const;
};

/// Throws InvariantViolation if the fraction relation fails to be an
/// equivalence, or if the zero-ring criterion (R_S = 0 iff 0 in S) fails.
LocalizedRing localize(const Ring& r, const MultiplicativeSet& s, const Budget& budget = {});
LocalizedRing localize_at(const Ideal& prime, const Budget& budget = {});
/// Tot(R) = R_{Reg(R)}; asserts the canonical map is an isomorphism.
LocalizedRing total_quotient_ring(const Ring& r, const Budget& budget = {});

}  // namespace amalgam
