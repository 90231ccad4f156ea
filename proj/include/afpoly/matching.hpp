#pragma once

#include <cstddef>
#include <vector>

#include "afpoly/molecular_graph.hpp"

namespace afpoly {

struct Matching {
  std::vector<int> edges;  // sorted edge ids
  bool perfect = false;
};

// Bounds for the exact oracle; beyond these it refuses instead of guessing.
struct OracleLimits {
  int max_hexagons = 12;
  std::size_t max_cycles = 1000000;
};

// All perfect matchings, duplicate-free, ordered lexicographically by their
// sorted edge id lists.
std::vector<Matching> enumerate_perfect_matchings(const MolecularGraph& g,
                                                  const OracleLimits& limits = {});

// Whether the graph restricted to alive edges admits a perfect matching on
// the alive vertices (every alive vertex covered). Augmenting-path search;
// the graph is bipartite by construction.
bool has_perfect_matching(const MolecularGraph& g, const std::vector<char>& vertex_alive,
                          const std::vector<char>& edge_alive);

// True iff exactly one perfect matching exists, decided by cascading
// forced degree-1 vertices: a bipartite graph with a unique perfect
// matching always exposes one. A nonempty residue means zero or at least
// two matchings, never exactly one.
bool has_unique_pm(const MolecularGraph& g, const std::vector<char>& edge_alive);
bool has_unique_pm(const MolecularGraph& g);

}  // namespace afpoly
