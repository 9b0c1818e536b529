#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// Per-element data preserved by every ring isomorphism.
struct ElementSignature {
  std::size_t additive_order = 0;
  bool unit = false;
  bool idempotent = false;
  std::size_t nilpotency = 0;  // least k with x^k = 0, or 0
  std::size_t annihilator = 0;
  std::size_t principal = 0;  // |xR|
  auto operator<=>(const ElementSignature&) const = default;
};

std::vector<ElementSignature> element_signatures(const Ring& r);

struct IsoSearch {
  std::optional<RingHom> iso;
  /// Empty when an isomorphism was found; otherwise why none exists
  /// (first mismatching invariant, or exhaustion of the search).
  std::string reason;
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking over images of a generating set, pruned by element
/// signatures. Throws BudgetExceeded past budget.iso_nodes.
IsoSearch find_isomorphism(const Ring& a, const Ring& b, const Budget& budget = {});

/// Greedy generators: repeatedly adjoin the least element outside the
/// current subring closure.
std::vector<Elem> ring_generators(const Ring& r);

}  // namespace amalgam
