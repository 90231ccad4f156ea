#include "afpoly/molecular_graph.hpp"

#include <algorithm>
#include <map>

#include "afpoly/errors.hpp"

namespace afpoly {

namespace {

// Corner indices of the side that faces direction d.
std::pair<int, int> side_corners(int d) { return {(d + 1) % 6, (d + 2) % 6}; }

}  // namespace

MolecularGraph build_graph(const HexSystem& hs) {
  MolecularGraph g;
  g.hexagon_count = hs.size();

  std::map<Vec2, int> vid;
  for (Axial cell : hs.cells())
    for (int k = 0; k < 6; ++k) vid.emplace(cell_corner(cell, k), 0);
  for (auto& [pos, id] : vid) {
    id = g.vertex_count();
    g.vertex_pos.push_back(pos);
  }

  std::map<std::pair<int, int>, int> eid;
  for (Axial cell : hs.cells()) {
    for (int k = 0; k < 6; ++k) {
      int u = vid.at(cell_corner(cell, k));
      int v = vid.at(cell_corner(cell, (k + 1) % 6));
      eid.emplace(std::minmax(u, v), 0);
    }
  }
  for (auto& [ends, id] : eid) {
    id = g.edge_count();
    g.edge_ends.push_back(ends);
  }

  g.adj.assign(g.vertex_count(), {});
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends[e];
    g.adj[u].push_back({v, e});
    g.adj[v].push_back({u, e});
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());

  // Corner sublattices give the bipartition: y mod 3 is 1 on one class and
  // 2 on the other for every corner of every cell.
  g.side.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    g.side[v] = static_cast<char>(((g.vertex_pos[v].y % 3) + 3) % 3 == 1);

  g.hexagon_faces.resize(hs.size());
  for (int c = 0; c < hs.size(); ++c) {
    for (int k = 0; k < 6; ++k) {
      int u = vid.at(cell_corner(hs.cell(c), k));
      int v = vid.at(cell_corner(hs.cell(c), (k + 1) % 6));
      g.hexagon_faces[c][k] = eid.at(std::minmax(u, v));
    }
  }

  auto side_edge = [&](int c, int d) {
    auto [k1, k2] = side_corners(d);
    int u = vid.at(cell_corner(hs.cell(c), k1));
    int v = vid.at(cell_corner(hs.cell(c), k2));
    return eid.at(std::minmax(u, v));
  };

  g.segment_list = segments(hs);
  for (const Segment& s : g.segment_list) {
    std::vector<int> ve;
    ve.push_back(side_edge(s.cells.front(), opposite(s.dir)));
    for (int c : s.cells) ve.push_back(side_edge(c, s.dir));
    g.vertical_edges.push_back(std::move(ve));
  }

  if (g.vertex_count() != 4 * hs.size() + 2 || g.edge_count() != 5 * hs.size() + 1)
    throw InternalError("molecular graph has unexpected vertex or edge count");
  for (auto [u, v] : g.edge_ends)
    if (g.side[u] == g.side[v]) throw InternalError("molecular graph is not bipartite");
  return g;
}

}  // namespace afpoly
