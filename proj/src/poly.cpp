#include "amalgam/poly.hpp"

#include <algorithm>

namespace amalgam {

PolyOverRing::PolyOverRing(Ring ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (c >= ring_.size()) throw InvalidArgument("coefficient out of range");
  while (!coeffs_.empty() && coeffs_.back() == ring_.zero()) coeffs_.pop_back();
}

PolyOverRing PolyOverRing::operator+(const PolyOverRing& o) const {
  if (!(ring_ == o.ring_)) throw InvalidArgument("polynomials over different rings");
  std::vector<Elem> c(std::max(coeffs_.size(), o.coeffs_.size()), ring_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_.add(coeff(i), o.coeff(i));
  return PolyOverRing(ring_, std::move(c));
}

PolyOverRing PolyOverRing::operator*(const PolyOverRing& o) const {
  if (!(ring_ == o.ring_)) throw InvalidArgument("polynomials over different rings");
  if (is_zero() || o.is_zero()) return PolyOverRing(ring_, {});
  std::vector<Elem> c(coeffs_.size() + o.coeffs_.size() - 1, ring_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = ring_.add(c[i + j], ring_.mul(coeffs_[i], o.coeffs_[j]));
  return PolyOverRing(ring_, std::move(c));
}

PolyOverRing PolyOverRing::map(const RingHom& h) const {
  if (!(h.source() == ring_)) throw InvalidArgument("homomorphism source mismatch");
  std::vector<Elem> c;
  c.reserve(coeffs_.size());
  for (Elem x : coeffs_) c.push_back(h(x));
  return PolyOverRing(h.target(), std::move(c));
}

std::string PolyOverRing::to_string(const std::string& var) const {
  if (is_zero()) return ring_.name(ring_.zero());
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == ring_.zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string& c = ring_.name(coeffs_[k]);
    if (k == 0) {
      out += c;
      continue;
    }
    if (coeffs_[k] != ring_.one()) out += "(" + c + ")";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace amalgam
