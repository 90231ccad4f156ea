#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "afpoly/hex_system.hpp"
#include "afpoly/segments.hpp"

namespace afpoly {

// The benzenoid graph realized from a hexagonal system: one unit hexagon per
// cell, shared edges identified exactly. Connected, bipartite, 4h+2 vertices
// and 5h+1 edges for h hexagons. Vertex/edge ids follow sorted coordinates,
// so they are reproducible.
struct MolecularGraph {
  std::vector<Vec2> vertex_pos;                       // sorted
  std::vector<std::pair<int, int>> edge_ends;         // u < v, sorted
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge)
  std::vector<char> side;                             // bipartition class
  std::vector<std::array<int, 6>> hexagon_faces;      // per cell, boundary edges in order
  std::vector<Segment> segment_list;                  // segments(hs)
  std::vector<std::vector<int>> vertical_edges;       // per segment, length+1 edge ids
  int hexagon_count = 0;

  int vertex_count() const { return static_cast<int>(vertex_pos.size()); }
  int edge_count() const { return static_cast<int>(edge_ends.size()); }
};

MolecularGraph build_graph(const HexSystem& hs);

}  // namespace afpoly
