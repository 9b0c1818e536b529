#pragma once

#include <cstddef>
#include <cstdint>

namespace amalgam {

struct Budget {
  std::size_t ring_size = 4096;     // any constructed ring
  std::size_t lattice_size = 512;   // rings entering full ideal enumeration
  std::uint64_t iso_nodes = 2'000'000;
  // Exhaustive (p, g) pairs for a confirming Gauss oracle pass.
  std::uint64_t gauss_pairs = 100'000'000;
  // Hard stop for a refutation search that keeps finding nothing.
  std::uint64_t gauss_refutation_pairs = 20'000'000'000ULL;
};

}  // namespace amalgam
