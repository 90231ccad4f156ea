#include "afpoly/matching.hpp"

#include <algorithm>

#include "afpoly/errors.hpp"

namespace afpoly {

namespace {

void enumerate_rec(const MolecularGraph& g, std::vector<char>& covered, int covered_count,
                   std::vector<int>& picked, std::vector<Matching>& out) {
  if (covered_count == g.vertex_count()) {
    Matching m;
    m.edges = picked;
    std::sort(m.edges.begin(), m.edges.end());
    m.perfect = true;
    out.push_back(std::move(m));
    return;
  }
  int u = 0;
  while (covered[u]) ++u;
  for (auto [v, e] : g.adj[u]) {
    if (covered[v]) continue;
    covered[u] = covered[v] = 1;
    picked.push_back(e);
    enumerate_rec(g, covered, covered_count + 2, picked, out);
    picked.pop_back();
    covered[u] = covered[v] = 0;
  }
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const MolecularGraph& g,
                                                  const OracleLimits& limits) {
  if (g.hexagon_count > limits.max_hexagons)
    throw SizeGuardError("perfect matching enumeration refused: system above size guard");
  std::vector<Matching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<int> picked;
  enumerate_rec(g, covered, 0, picked, out);
  std::sort(out.begin(), out.end(),
            [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
  return out;
}

bool has_perfect_matching(const MolecularGraph& g, const std::vector<char>& vertex_alive,
                          const std::vector<char>& edge_alive) {
  int need = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (vertex_alive[v] && g.side[v]) ++need;
  int other = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (vertex_alive[v] && !g.side[v]) ++other;
  if (need != other) return false;

  std::vector<int> match(g.vertex_count(), -1);
  std::vector<char> visited(g.vertex_count(), 0);

  auto augment = [&](auto&& self, int u) -> bool {
    for (auto [v, e] : g.adj[u]) {
      if (!edge_alive[e] || !vertex_alive[v] || visited[v]) continue;
      visited[v] = 1;
      if (match[v] < 0 || self(self, match[v])) {
        match[v] = u;
        match[u] = v;
        return true;
      }
    }
    return false;
  };

  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!vertex_alive[u] || !g.side[u]) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, u)) return false;
  }
  return true;
}

bool has_unique_pm(const MolecularGraph& g, const std::vector<char>& edge_alive) {
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<char> alive(g.vertex_count(), 1);
  std::vector<char> ealive = edge_alive;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!ealive[e]) continue;
    ++degree[g.edge_ends[e].first];
    ++degree[g.edge_ends[e].second];
  }
  std::vector<int> ones;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (degree[v] == 1) ones.push_back(v);

  int remaining = g.vertex_count();
  while (!ones.empty()) {
    int u = ones.back();
    ones.pop_back();
    if (!alive[u] || degree[u] != 1) continue;
    int w = -1;
    for (auto [v, e] : g.adj[u]) {
      if (ealive[e] && alive[v]) {
        w = v;
        break;
      }
    }
    if (w < 0) throw InternalError("degree bookkeeping out of sync");
    // Match u--w, drop both endpoints and their incident edges.
    for (int x : {u, w}) {
      alive[x] = 0;
      --remaining;
      for (auto [v, e] : g.adj[x]) {
        if (!ealive[e]) continue;
        ealive[e] = 0;
        if (alive[v] && --degree[v] == 1) ones.push_back(v);
      }
    }
    degree[u] = degree[w] = 0;
  }
  // Empty residue: the cascade itself is the unique perfect matching. Any
  // residue has minimum degree 0 (no matching) or >= 2 (at least two).
  return remaining == 0;
}

bool has_unique_pm(const MolecularGraph& g) {
  return has_unique_pm(g, std::vector<char>(g.edge_count(), 1));
}

}  // namespace afpoly
