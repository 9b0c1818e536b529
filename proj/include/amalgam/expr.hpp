#pragma once

// Canonical construction expressions in the spec-file grammar. These strings
// are the provenance of every constructed ring, so re-parsing one rebuilds a
// bit-identical ring.

#include <string>

#include "amalgam/ideal.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/ring.hpp"

namespace amalgam::expr {

std::string zmod(long n);
std::string polyquot(const Ring& base, const PolyOverRing& modulus);
std::string truncpoly(long p, long k, long d);
std::string product(const Ring& a, const Ring& b);
std::string quot(const Ring& r, const Ideal& i);
std::string ideal(const Ideal& i);
std::string hom(const RingHom& h);
std::string amalg(const RingHom& f, const Ideal& b);
std::string dup(const Ideal& a);
std::string fiber(const RingHom& rho, const RingHom& sigma);

}  // namespace amalgam::expr
