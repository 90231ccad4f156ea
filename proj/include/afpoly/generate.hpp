#pragma once

#include <vector>

#include "afpoly/hex_system.hpp"

namespace afpoly {

// Every catacondensed hexagonal system with 1..h_max hexagons, one
// representative per congruence class, ordered by size then canonical key.
// Refuses h_max above the bound: the exhaustive catalogue is meant for
// desk-scale verification.
std::vector<HexSystem> generate_all(int h_max, int bound = 8);

}  // namespace afpoly
