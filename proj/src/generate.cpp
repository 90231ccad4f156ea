#include "afpoly/generate.hpp"

#include <map>
#include <set>
#include <string>

#include "afpoly/canonical.hpp"

namespace afpoly {

std::vector<HexSystem> generate_all(int h_max, int bound) {
  if (h_max < 1) throw ParseError("catalogue size must be at least 1");
  if (h_max > bound) throw SizeGuardError("catalogue bound exceeded");

  std::vector<HexSystem> out;
  std::map<std::string, HexSystem> frontier;
  HexSystem seed = HexSystem::from_cells({{0, 0}});
  frontier.emplace(canonical_key(seed), std::move(seed));

  for (int h = 1; h <= h_max; ++h) {
    std::map<std::string, HexSystem> next;
    for (const auto& [key, hs] : frontier) {
      out.push_back(hs);
      if (h == h_max) continue;
      for (int c = 0; c < hs.size(); ++c) {
        std::vector<int> dirs = hs.fusion_dirs(c);
        if (dirs.size() >= 3) continue;
        for (int d = 0; d < 6; ++d) {
          if (hs.neighbor(c, d) >= 0) continue;
          bool ok = true;
          for (int e : dirs) ok = ok && !dirs_adjacent(d, e);
          if (!ok) continue;
          Axial pos = step(hs.cell(c), d);
          if (hs.index_of(pos) >= 0) continue;
          // The new cell may touch only its parent, otherwise the growth
          // closes a ring or makes three hexagons share a vertex.
          int touches = 0;
          for (int e = 0; e < 6; ++e) touches += hs.index_of(step(pos, e)) >= 0;
          if (touches != 1) continue;
          std::vector<Axial> cells = hs.cells();
          cells.push_back(pos);
          HexSystem grown = HexSystem::from_cells(std::move(cells));
          std::string grown_key = canonical_key(grown);
          next.emplace(std::move(grown_key), std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace afpoly
