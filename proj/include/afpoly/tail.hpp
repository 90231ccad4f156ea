#pragma once

#include <optional>
#include <vector>

#include "afpoly/hex_system.hpp"

namespace afpoly {

enum class TailKind { LinearChain, EndKink, EndBranched };

// The decomposition anchor of a system: a terminal hexagon of a linear
// chain, an end kink, or an end branched hexagon h, together with the
// maximal segments through it. arm1/arm2/arm3 start at h; t_i + 2 is the
// arm length (t = -1 marks a degenerate one-cell arm).
struct Tail {
  int h = 0;
  TailKind kind = TailKind::LinearChain;
  int t1 = -1;
  int t2 = -1;
  int t3 = -1;
  std::vector<int> arm1, arm2, arm3;
};

// All valid tails of the system, in a fixed deterministic order.
std::vector<Tail> enumerate_tails(const HexSystem& hs);

// The deterministic tail: smallest canonical rank of h, then smaller t1,
// then smaller t3. Throws InternalError if no tail exists (impossible for
// a valid catacondensed system).
Tail find_tail(const HexSystem& hs);

// Throws InternalError unless the tail satisfies its shape invariants.
void validate_tail(const HexSystem& hs, const Tail& tail);

// The residual systems the tail splits off. Every entry is a forest of
// smaller systems:
//   h1: drop all arm1/arm2 cells except h          (always one component)
//   h2: drop all arm1/arm2 cells including h       (empty or one component)
//   h3: drop the whole tail                        (up to two components)
//   h4: only for an end branched tail with t3 = 0: h3 minus the maximal
//       straight runs continuing past the far end of arm3 (up to four
//       components); disengaged otherwise.
struct SubsystemSet {
  std::vector<HexSystem> h1, h2, h3;
  std::optional<std::vector<HexSystem>> h4;
};

SubsystemSet subsystems(const HexSystem& hs, const Tail& tail);

}  // namespace afpoly
