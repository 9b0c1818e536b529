#pragma once

#include <string>
#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Z/nZ; element i is the residue i.
Ring mk_zmod(long n, const Budget& budget = {});

/// R[x]/(modulus) for a monic modulus of degree d >= 1. Element index is
/// sum c_i |R|^i over the coefficient vector (c_0 .. c_{d-1}).
Ring mk_poly_quot(const Ring& base, const PolyOverRing& modulus, const Budget& budget = {});

/// F_p[x_1..x_k] / (x_1..x_k)^d, coefficient vectors over the monomials of
/// total degree < d in graded-lex order.
Ring mk_truncated_poly(long p, long k, long d, const Budget& budget = {});

struct ProductRing {
  Ring ring;
  RingHom proj1;
  RingHom proj2;
  std::size_t right_size = 0;
  Elem pair(Elem a, Elem b) const { return static_cast<Elem>(a * right_size + b); }
};
/// Componentwise arithmetic; (i, j) has index i*|R2| + j.
ProductRing mk_product(const Ring& left, const Ring& right, const Budget& budget = {});

struct QuotientRing {
  Ring ring;
  RingHom projection;
};
/// Cosets ordered by their least member; each coset is named after it.
QuotientRing mk_quotient(const Ring& r, const Ideal& i, const Budget& budget = {});

struct Subring {
  Ring ring;
  RingHom inclusion;
  std::vector<int> from_ambient;  // -1 outside the subring
  Elem local(Elem ambient) const;
};
/// Subring carried by `members` (closure checked), elements in ambient order
/// and named as in the ambient ring.
Subring mk_subring(const Ring& ambient, const Subset& members, std::string provenance,
                   Ring::Kind kind = Ring::Kind::Subring, std::vector<Ring> operands = {},
                   const Budget& budget = {});

/// Image of a homomorphism as a subring of its target.
Subring image_subring(const RingHom& h, const Budget& budget = {});

/// Smallest subring containing the given elements.
Subset subring_closure(const Ring& r, const std::vector<Elem>& gens);

bool is_prime_number(long p);

}  // namespace amalgam
