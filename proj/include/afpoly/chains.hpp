#pragma once

#include <optional>
#include <vector>

#include "afpoly/hex_system.hpp"
#include "afpoly/polynomial.hpp"

namespace afpoly {

// A hexagonal chain described by its maximal segments: segment i holds
// runs[i] + 2 hexagons, consecutive segments share a kink. An empty run
// list is the single hexagon.
struct ChainSpec {
  std::vector<int> runs;
};

// Anti-forcing polynomial of the chain, by the three-term segment
// recurrence with its truncation conventions (a trailing run of -1 drops;
// the fully truncated chain is the empty graph with polynomial 1).
Polynomial chain_af_poly(const ChainSpec& spec);

// A concrete realization of the chain (all kinks turned the same way); any
// realization of the same runs has the same polynomial.
HexSystem build_chain(const ChainSpec& spec);

// Segment runs of a system that is a hexagonal chain (no branched
// hexagons), reading from the end that gives the smaller run tuple;
// nullopt when the system is branched.
std::optional<ChainSpec> chain_spec_of(const HexSystem& hs);

}  // namespace afpoly
