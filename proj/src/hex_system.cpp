#include "afpoly/hex_system.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace afpoly {

HexSystem HexSystem::from_cells(std::vector<Axial> cells, int root) {
  HexSystem hs;
  hs.cells_ = std::move(cells);
  hs.root_ = root;
  hs.build_adjacency();
  hs.validate();
  return hs;
}

HexSystem HexSystem::from_tree(std::vector<Axial> cells, std::vector<Fusion> fusions, int root) {
  const int n = static_cast<int>(cells.size());
  for (const Fusion& f : fusions) {
    if (f.parent < 0 || f.parent >= n || f.child < 0 || f.child >= n)
      throw ParseError("dangling fusion reference");
    if (f.dir < 0 || f.dir > 5) throw ParseError("fusion direction out of range");
    if (step(cells[f.parent], f.dir) != cells[f.child])
      throw ParseError("fusion direction does not match cell coordinates");
  }
  if (root < 0 || root >= n) throw ParseError("dangling root reference");

  HexSystem hs;
  hs.cells_ = std::move(cells);
  hs.root_ = root;
  hs.build_adjacency();
  hs.validate();

  // The declared tree must be exactly the lattice adjacency; a declared tree
  // with fewer links than geometric contacts would hide a fusion.
  int contacts = 0;
  for (int i = 0; i < hs.size(); ++i) contacts += hs.degree(i);
  contacts /= 2;
  if (static_cast<int>(fusions.size()) != contacts)
    throw ParseError("declared fusions do not match lattice adjacency");
  return hs;
}

void HexSystem::build_adjacency() {
  std::map<Axial, int> index;
  for (int i = 0; i < size(); ++i) {
    if (!index.emplace(cells_[i], i).second)
      throw ParseError("overlapping hexagons: duplicate cell coordinate");
  }
  nbr_.assign(size(), {-1, -1, -1, -1, -1, -1});
  for (int i = 0; i < size(); ++i) {
    for (int d = 0; d < 6; ++d) {
      auto it = index.find(step(cells_[i], d));
      if (it != index.end()) nbr_[i][d] = it->second;
    }
  }
}

void HexSystem::validate() const {
  if (cells_.empty()) throw ParseError("empty hexagonal system");

  int contacts = 0;
  for (int i = 0; i < size(); ++i) {
    std::vector<int> dirs = fusion_dirs(i);
    contacts += static_cast<int>(dirs.size());
    if (dirs.size() > 3) throw ParseError("hexagon with more than three fusions");
    for (size_t a = 0; a < dirs.size(); ++a)
      for (size_t b = a + 1; b < dirs.size(); ++b)
        if (dirs_adjacent(dirs[a], dirs[b]))
          throw ParseError("adjacent fusion directions: three hexagons would share a vertex");
  }
  contacts /= 2;

  // Connected and acyclic: exactly the dual tree of a catacondensed system.
  std::vector<char> seen(size(), 0);
  std::queue<int> bfs;
  bfs.push(root_);
  seen[root_] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop();
    for (int d = 0; d < 6; ++d) {
      int j = nbr_[i][d];
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        ++reached;
        bfs.push(j);
      }
    }
  }
  if (reached != size()) throw ParseError("hexagons do not form a connected system");
  if (contacts != size() - 1)
    throw ParseError("hexagons touch without being fused: dual structure is not a tree");
}

int HexSystem::degree(int i) const {
  int d = 0;
  for (int k = 0; k < 6; ++k) d += nbr_[i][k] >= 0;
  return d;
}

std::vector<int> HexSystem::neighbor_list(int i) const {
  std::vector<int> out;
  for (int k = 0; k < 6; ++k)
    if (nbr_[i][k] >= 0) out.push_back(nbr_[i][k]);
  return out;
}

std::vector<int> HexSystem::fusion_dirs(int i) const {
  std::vector<int> out;
  for (int k = 0; k < 6; ++k)
    if (nbr_[i][k] >= 0) out.push_back(k);
  return out;
}

int HexSystem::dir_between(int i, int j) const {
  for (int k = 0; k < 6; ++k)
    if (nbr_[i][k] == j) return k;
  throw InternalError("dir_between: cells are not adjacent");
}

int HexSystem::index_of(Axial a) const {
  for (int i = 0; i < size(); ++i)
    if (cells_[i] == a) return i;
  return -1;
}

std::vector<Fusion> HexSystem::fusions() const {
  std::vector<Fusion> out;
  std::vector<char> seen(size(), 0);
  std::queue<int> bfs;
  bfs.push(root_);
  seen[root_] = 1;
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop();
    for (int d = 0; d < 6; ++d) {
      int j = nbr_[i][d];
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        out.push_back({i, j, d});
        bfs.push(j);
      }
    }
  }
  return out;
}

std::vector<HexSystem> components_after_deleting(const HexSystem& hs,
                                                 const std::vector<char>& deleted) {
  std::vector<HexSystem> out;
  std::vector<char> seen(hs.size(), 0);
  for (int start = 0; start < hs.size(); ++start) {
    if (deleted[start] || seen[start]) continue;
    std::vector<int> comp;
    std::queue<int> bfs;
    bfs.push(start);
    seen[start] = 1;
    while (!bfs.empty()) {
      int i = bfs.front();
      bfs.pop();
      comp.push_back(i);
      for (int d = 0; d < 6; ++d) {
        int j = hs.neighbor(i, d);
        if (j >= 0 && !deleted[j] && !seen[j]) {
          seen[j] = 1;
          bfs.push(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<Axial> cells;
    cells.reserve(comp.size());
    for (int i : comp) cells.push_back(hs.cell(i));
    out.push_back(HexSystem::from_cells(std::move(cells)));
  }
  return out;
}

}  // namespace afpoly
