#pragma once

#include <cstddef>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

// Exponential-time reference answers for tiny instances.

inline constexpr std::size_t kExactChromaticMaxN = 14;
inline constexpr std::size_t kExactAlphaMaxN = 20;

// Minimum palette admitting a proper coloring. Throws std::length_error when
// n > kExactChromaticMaxN and std::domain_error when a full loop makes every
// coloring improper.
int exact_chromatic(const Hypergraph& h);

// Maximum independent set size. Throws std::length_error when n > kExactAlphaMaxN.
std::size_t exact_alpha(const Hypergraph& h);

}  // namespace hyperchrom
