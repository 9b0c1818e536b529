#include "amalgam/expr.hpp"

namespace amalgam::expr {

std::string zmod(long n) { return "(zmod " + std::to_string(n) + ")"; }

std::string polyquot(const Ring& base, const PolyOverRing& modulus) {
  std::string s = "(polyquot " + base.provenance() + " (poly";
  for (int k = 0; k <= modulus.degree(); ++k) s += " " + base.name(modulus.coeff(static_cast<std::size_t>(k)));
  return s + "))";
}

std::string truncpoly(long p, long k, long d) {
  return "(truncpoly " + std::to_string(p) + " " + std::to_string(k) + " " + std::to_string(d) + ")";
}

std::string product(const Ring& a, const Ring& b) {
  return "(product " + a.provenance() + " " + b.provenance() + ")";
}

std::string ideal(const Ideal& i) {
  std::string s = "(ideal " + i.ring().provenance();
  for (Elem g : i.generators()) s += " " + i.ring().name(g);
  return s + ")";
}

std::string quot(const Ring& r, const Ideal& i) { return "(quot " + r.provenance() + " " + ideal(i) + ")"; }

std::string hom(const RingHom& h) {
  std::string s = "(hom " + h.source().provenance() + " " + h.target().provenance() + " (images";
  for (Elem y : h.map()) s += " " + h.target().name(y);
  return s + "))";
}

std::string amalg(const RingHom& f, const Ideal& b) {
  return "(amalg " + f.source().provenance() + " " + f.target().provenance() + " " + hom(f) + " " + ideal(b) + ")";
}

std::string dup(const Ideal& a) { return "(dup " + a.ring().provenance() + " " + ideal(a) + ")"; }

std::string fiber(const RingHom& rho, const RingHom& sigma) {
  return "(fiber " + hom(rho) + " " + hom(sigma) + ")";
}

}  // namespace amalgam::expr
