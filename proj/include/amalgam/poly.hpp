#pragma once

#include <string>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// Polynomial over a finite ring, least-significant coefficient first, with
/// trailing zeros trimmed. The zero polynomial has no coefficients.
class PolyOverRing {
 public:
  PolyOverRing(Ring ring, std::vector<Elem> coeffs);

  const Ring& ring() const { return ring_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
  bool monic() const { return !is_zero() && coeffs_.back() == ring_.one(); }

  PolyOverRing operator+(const PolyOverRing& o) const;
  PolyOverRing operator*(const PolyOverRing& o) const;
  bool operator==(const PolyOverRing& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }

  /// Apply a homomorphism coefficientwise.
  PolyOverRing map(const RingHom& h) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  Ring ring_;
  std::vector<Elem> coeffs_;
};

}  // namespace amalgam
