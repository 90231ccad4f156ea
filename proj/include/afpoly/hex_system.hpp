#pragma once

#include <array>
#include <vector>

#include "afpoly/errors.hpp"
#include "afpoly/geometry.hpp"

namespace afpoly {

struct Fusion {
  int parent = -1;
  int child = -1;
  int dir = 0;  // parent -> child
};

// A catacondensed hexagonal system: a finite set of hexagon cells whose
// lattice-adjacency graph is a tree, no cell fused on two adjacent sides,
// all cell coordinates distinct. Immutable after construction.
class HexSystem {
 public:
  // Builds from a bare cell set; fusions are inferred from adjacency.
  static HexSystem from_cells(std::vector<Axial> cells, int root = 0);

  // Builds from an explicit rooted fusion tree (parser path). The declared
  // tree must match lattice adjacency exactly.
  static HexSystem from_tree(std::vector<Axial> cells, std::vector<Fusion> fusions, int root);

  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<Axial>& cells() const { return cells_; }
  Axial cell(int i) const { return cells_[i]; }
  int root() const { return root_; }

  // Cell index of the neighbour in direction dir, or -1 for a free side.
  int neighbor(int i, int dir) const { return nbr_[i][dir]; }
  int degree(int i) const;
  std::vector<int> neighbor_list(int i) const;
  std::vector<int> fusion_dirs(int i) const;

  // Direction from cell i to an adjacent cell j.
  int dir_between(int i, int j) const;

  int index_of(Axial a) const;  // -1 if absent

  // Fusions in BFS order from the root.
  std::vector<Fusion> fusions() const;

 private:
  HexSystem() = default;
  void build_adjacency();
  void validate() const;

  std::vector<Axial> cells_;
  std::vector<std::array<int, 6>> nbr_;
  int root_ = 0;
};

// Connected components of the surviving cells, as fresh systems. `deleted`
// is indexed by cell; components keep their lattice coordinates.
std::vector<HexSystem> components_after_deleting(const HexSystem& hs,
                                                 const std::vector<char>& deleted);

}  // namespace afpoly
