#pragma once

#include <vector>

#include "afpoly/matching.hpp"
#include "afpoly/molecular_graph.hpp"

namespace afpoly {

// A simple cycle whose edges alternate between a perfect matching and its
// complement; edges and vertices are stored in traversal order.
struct AlternatingCycle {
  std::vector<int> edges;
  std::vector<int> vertices;
};

// All alternating cycles of M, each found exactly once: the search starts
// at the smallest vertex of the cycle and leaves it along its matched edge,
// which fixes the traversal direction.
std::vector<AlternatingCycle> alternating_cycles(const MolecularGraph& g, const Matching& m,
                                                 const OracleLimits& limits = {});

// Compatible: disjoint, or intersecting only in matched edges. Sharing a
// vertex without sharing a matched edge through it is incompatible.
bool is_compatible(const MolecularGraph& g, const Matching& m, const AlternatingCycle& a,
                   const AlternatingCycle& b);

// Remainder of the graph after deleting S and then cascading: edges in every
// perfect matching are removed with their endpoints, edges in none are
// removed alone, until stable. Forced/anti-forced classification is exact,
// by matching feasibility tests.
struct ClosureResult {
  std::vector<char> vertex_alive;
  std::vector<char> edge_alive;
  bool empty() const;
};

ClosureResult closure(const MolecularGraph& g, const Matching& m, const std::vector<int>& s);

// S anti-forces M iff the closure remainder is empty; checked against the
// direct test that G - S has a unique perfect matching. Disagreement would
// be a bug and throws.
bool is_antiforcing_set(const MolecularGraph& g, const Matching& m, const std::vector<int>& s);

struct AfCertificate {
  int af = 0;
  std::vector<int> hitting_set;        // a minimum anti-forcing set
  std::vector<int> compatible_cycles;  // indices into alternating_cycles(g, m)
};

// Minimum anti-forcing number of M: exact branch-and-bound hitting set over
// the alternating cycles, certified optimal by a compatible cycle family of
// equal size and validated as an anti-forcing set.
AfCertificate af_number(const MolecularGraph& g, const Matching& m,
                        const OracleLimits& limits = {});

// Largest pairwise-compatible family of alternating cycles, exact.
int c_prime(const MolecularGraph& g, const Matching& m, const OracleLimits& limits = {});

// Maximum number of simultaneously alternating hexagons over all perfect
// matchings.
int fries_number(const MolecularGraph& g, const OracleLimits& limits = {});

// Every maximal segment carries exactly one matched vertical edge.
bool check_vertical_edge_rule(const MolecularGraph& g, const Matching& m);

}  // namespace afpoly
