#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "afpoly/hex_system.hpp"

namespace afpoly {

// Text forms accepted by parse_system (whitespace-insensitive outside
// tokens, '#' starts a comment to end of line):
//
//   H{...}            rooted fusion tree; each branch is a digit 0..5 (the
//                     absolute direction parent -> child) followed by the
//                     child's own braces.
//   C:LSR...          hexagonal chain by turn sequence (h-2 turns); "C:"
//                     alone is the two-hexagon chain.
//   Hl:r1,r2,...,rn   hexagonal chain by maximal-segment runs, r_i >= 0
//                     (segment i has r_i + 2 hexagons); "Hl:" alone is a
//                     single hexagon.
HexSystem parse_system(std::string_view text);

// Rooted-tree serialization in the H{...} form, children ordered by
// direction; parse_system(to_hextree(h)) reproduces the system.
std::string to_hextree(const HexSystem& hs);

// Chain built from turn values over {+1, 0, -1} (left, straight, right).
HexSystem build_chain_from_turns(const std::vector<int>& turns);

}  // namespace afpoly
