#pragma once

#include <string>
#include <vector>

#include "afpoly/hex_system.hpp"

namespace afpoly {

// Canonical byte key of the cell set under the twelve lattice symmetries
// plus translation: equal keys iff the systems are congruent. Computed as
// the lexicographically smallest of the twelve origin-normalized sorted
// coordinate lists.
std::string canonical_key(const HexSystem& hs);

// Position of every cell in the canonical coordinate order. When several
// symmetries realize the canonical image, a cell gets the smallest position
// it attains, so ranks are stable across congruent representations.
std::vector<int> canonical_ranks(const HexSystem& hs);

}  // namespace afpoly
