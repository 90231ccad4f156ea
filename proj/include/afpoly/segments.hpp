#pragma once

#include <vector>

#include "afpoly/hex_system.hpp"

namespace afpoly {

// A maximal linear hexagonal chain: an inclusion-maximal straight run of
// fused hexagons. Its vertical edges are the length+1 edges perpendicular
// to the run direction (the fusion edges plus the two end edges).
struct Segment {
  std::vector<int> cells;  // in walk order along dir
  int dir = 0;             // axis direction, 0..2
  int length = 0;          // number of hexagons
};

// All maximal segments; every fusion lies on exactly one, every cell on at
// least one. A single free hexagon forms one length-1 segment on axis 0.
std::vector<Segment> segments(const HexSystem& hs);

enum class HexClass { Terminal, Kink, Linear, Branched };

// Terminal: one neighbour. Branched: three. With two neighbours, Linear
// when the fusions are opposite sides and Kink otherwise. A lone hexagon
// counts as terminal.
HexClass classify_hexagon(const HexSystem& hs, int cell);

}  // namespace afpoly
