#include "afpoly/alternating.hpp"

#include <algorithm>

#include "afpoly/errors.hpp"

namespace afpoly {

namespace {

std::vector<char> edge_mask(const MolecularGraph& g, const std::vector<int>& edges) {
  std::vector<char> mask(g.edge_count(), 0);
  for (int e : edges) mask[e] = 1;
  return mask;
}

std::vector<int> matched_partner(const MolecularGraph& g, const Matching& m) {
  std::vector<int> partner(g.vertex_count(), -1);
  for (int e : m.edges) {
    auto [u, v] = g.edge_ends[e];
    partner[u] = v;
    partner[v] = u;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (partner[v] < 0) throw InternalError("matching is not perfect");
  return partner;
}

int edge_between(const MolecularGraph& g, int u, int v) {
  for (auto [w, e] : g.adj[u])
    if (w == v) return e;
  throw InternalError("no edge between vertices");
}

struct CycleSearch {
  const MolecularGraph& g;
  const std::vector<char>& in_m;
  const std::vector<int>& partner;
  const OracleLimits& limits;
  std::vector<char> on_path;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  std::vector<AlternatingCycle>* out;

  // Called with the path ending at a matched vertex pair; branch over the
  // unmatched edges leaving the tail.
  void extend(int v0, int tail) {
    for (auto [z, e] : g.adj[tail]) {
      if (in_m[e]) continue;
      if (z == v0) {
        AlternatingCycle c;
        c.vertices = path_vertices;
        c.edges = path_edges;
        c.edges.push_back(e);
        if (out->size() >= limits.max_cycles)
          throw SizeGuardError("alternating cycle enumeration refused: cycle cap exceeded");
        out->push_back(std::move(c));
        continue;
      }
      if (z < v0 || on_path[z]) continue;
      int w = partner[z];
      if (w < v0 || on_path[w]) continue;
      int me = edge_between(g, z, w);
      on_path[z] = on_path[w] = 1;
      path_vertices.push_back(z);
      path_vertices.push_back(w);
      path_edges.push_back(e);
      path_edges.push_back(me);
      extend(v0, w);
      path_edges.pop_back();
      path_edges.pop_back();
      path_vertices.pop_back();
      path_vertices.pop_back();
      on_path[z] = on_path[w] = 0;
    }
  }
};

struct CycleInfo {
  std::vector<int> edges;         // sorted
  std::vector<int> vertices;      // sorted
  std::vector<int> free_edges;    // sorted, edges outside the matching
};

std::vector<CycleInfo> cycle_infos(const MolecularGraph& g, const std::vector<char>& in_m,
                                   const std::vector<AlternatingCycle>& cycles) {
  std::vector<CycleInfo> infos(cycles.size());
  for (size_t i = 0; i < cycles.size(); ++i) {
    infos[i].edges = cycles[i].edges;
    std::sort(infos[i].edges.begin(), infos[i].edges.end());
    infos[i].vertices = cycles[i].vertices;
    std::sort(infos[i].vertices.begin(), infos[i].vertices.end());
    for (int e : infos[i].edges)
      if (!in_m[e]) infos[i].free_edges.push_back(e);
  }
  return infos;
}

bool infos_compatible(const MolecularGraph& g, const std::vector<char>& in_m, const CycleInfo& a,
                      const CycleInfo& b) {
  std::vector<int> shared_edges;
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(shared_edges));
  for (int e : shared_edges)
    if (!in_m[e]) return false;
  std::vector<int> shared_vertices;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                        b.vertices.end(), std::back_inserter(shared_vertices));
  for (int v : shared_vertices) {
    bool on_shared_matched_edge = false;
    for (int e : shared_edges) {
      auto [x, y] = g.edge_ends[e];
      if (x == v || y == v) {
        on_shared_matched_edge = true;
        break;
      }
    }
    if (!on_shared_matched_edge) return false;
  }
  return true;
}

// Exact maximum pairwise-compatible family, plain branch and bound.
struct CompatibleSearch {
  const std::vector<std::vector<char>>& ok;
  int n;
  std::vector<int> chosen;
  std::vector<int> best;

  void rec(int i) {
    if (chosen.size() > best.size()) best = chosen;
    if (chosen.size() + static_cast<size_t>(n - i) <= best.size()) return;
    for (int j = i; j < n; ++j) {
      bool fits = true;
      for (int c : chosen) {
        if (!ok[c][j]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      chosen.push_back(j);
      rec(j + 1);
      chosen.pop_back();
    }
  }
};

std::vector<int> max_compatible_family(const MolecularGraph& g, const std::vector<char>& in_m,
                                       const std::vector<CycleInfo>& infos) {
  int n = static_cast<int>(infos.size());
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      ok[i][j] = ok[j][i] = infos_compatible(g, in_m, infos[i], infos[j]);
  CompatibleSearch cs{ok, n, {}, {}};
  cs.rec(0);
  return cs.best;
}

// Exact minimum hitting set over the cycles' free edges.
struct HittingSearch {
  const std::vector<CycleInfo>& infos;
  int edge_count;
  std::vector<int> current;
  std::vector<int> best;

  bool hit(const CycleInfo& c, const std::vector<char>& picked) const {
    for (int e : c.free_edges)
      if (picked[e]) return true;
    return false;
  }

  // Greedy packing of uncovered cycles with pairwise-disjoint free edges;
  // each needs its own hitting edge.
  int lower_bound(const std::vector<char>& picked) const {
    std::vector<char> used(edge_count, 0);
    int packed = 0;
    for (const CycleInfo& c : infos) {
      if (hit(c, picked)) continue;
      bool disjoint = true;
      for (int e : c.free_edges) {
        if (used[e]) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      ++packed;
      for (int e : c.free_edges) used[e] = 1;
    }
    return packed;
  }

  void rec(std::vector<char>& picked) {
    const CycleInfo* branch = nullptr;
    for (const CycleInfo& c : infos) {
      if (hit(c, picked)) continue;
      if (!branch || c.free_edges.size() < branch->free_edges.size()) branch = &c;
    }
    if (!branch) {
      if (best.empty() || current.size() < best.size()) best = current;
      return;
    }
    if (!best.empty() && current.size() + lower_bound(picked) >= best.size()) return;
    for (int e : branch->free_edges) {
      picked[e] = 1;
      current.push_back(e);
      rec(picked);
      current.pop_back();
      picked[e] = 0;
    }
  }
};

}  // namespace

std::vector<AlternatingCycle> alternating_cycles(const MolecularGraph& g, const Matching& m,
                                                 const OracleLimits& limits) {
  if (g.hexagon_count > limits.max_hexagons)
    throw SizeGuardError("alternating cycle enumeration refused: system above size guard");
  std::vector<char> in_m = edge_mask(g, m.edges);
  std::vector<int> partner = matched_partner(g, m);

  std::vector<AlternatingCycle> out;
  CycleSearch search{g, in_m, partner, limits, std::vector<char>(g.vertex_count(), 0), {}, {},
                     &out};
  for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
    int v1 = partner[v0];
    if (v1 < v0) continue;  // v0 must be the cycle minimum
    search.on_path[v0] = search.on_path[v1] = 1;
    search.path_vertices = {v0, v1};
    search.path_edges = {edge_between(g, v0, v1)};
    search.extend(v0, v1);
    search.on_path[v0] = search.on_path[v1] = 0;
  }
  return out;
}

bool is_compatible(const MolecularGraph& g, const Matching& m, const AlternatingCycle& a,
                   const AlternatingCycle& b) {
  std::vector<char> in_m = edge_mask(g, m.edges);
  auto infos = cycle_infos(g, in_m, {a, b});
  return infos_compatible(g, in_m, infos[0], infos[1]);
}

bool ClosureResult::empty() const {
  for (char v : vertex_alive)
    if (v) return false;
  return true;
}

ClosureResult closure(const MolecularGraph& g, const Matching& m, const std::vector<int>& s) {
  std::vector<char> in_m = edge_mask(g, m.edges);
  for (int e : s)
    if (in_m[e]) throw std::invalid_argument("closure: deleted set meets the matching");

  ClosureResult res;
  res.vertex_alive.assign(g.vertex_count(), 1);
  res.edge_alive.assign(g.edge_count(), 1);
  for (int e : s) res.edge_alive[e] = 0;

  for (;;) {
    if (!has_perfect_matching(g, res.vertex_alive, res.edge_alive))
      throw std::invalid_argument("closure: remainder lost all perfect matchings");

    std::vector<int> forced, anti_forced;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!res.edge_alive[e]) continue;
      auto [u, v] = g.edge_ends[e];
      if (!res.vertex_alive[u] || !res.vertex_alive[v]) {
        res.edge_alive[e] = 0;
        continue;
      }
      // e in some perfect matching <=> the rest matches without u, v.
      std::vector<char> va = res.vertex_alive;
      va[u] = va[v] = 0;
      bool in_some = has_perfect_matching(g, va, res.edge_alive);
      std::vector<char> ea = res.edge_alive;
      ea[e] = 0;
      bool avoidable = has_perfect_matching(g, res.vertex_alive, ea);
      if (!avoidable) forced.push_back(e);
      if (!in_some) anti_forced.push_back(e);
    }
    if (forced.empty() && anti_forced.empty()) break;
    for (int e : forced) {
      auto [u, v] = g.edge_ends[e];
      res.vertex_alive[u] = res.vertex_alive[v] = 0;
    }
    for (int e : anti_forced) res.edge_alive[e] = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge_ends[e];
      if (!res.vertex_alive[u] || !res.vertex_alive[v]) res.edge_alive[e] = 0;
    }
  }
  return res;
}

bool is_antiforcing_set(const MolecularGraph& g, const Matching& m, const std::vector<int>& s) {
  bool closure_empty = closure(g, m, s).empty();

  std::vector<char> ealive(g.edge_count(), 1);
  for (int e : s) ealive[e] = 0;
  bool unique = has_unique_pm(g, ealive);

  if (closure_empty != unique)
    throw InternalError("closure-empty test disagrees with unique-matching test");
  return unique;
}

AfCertificate af_number(const MolecularGraph& g, const Matching& m, const OracleLimits& limits) {
  std::vector<AlternatingCycle> cycles = alternating_cycles(g, m, limits);
  std::vector<char> in_m = edge_mask(g, m.edges);
  std::vector<CycleInfo> infos = cycle_infos(g, in_m, cycles);

  AfCertificate cert;
  cert.compatible_cycles = max_compatible_family(g, in_m, infos);

  HittingSearch hs{infos, g.edge_count(), {}, {}};
  std::vector<char> picked(g.edge_count(), 0);
  hs.rec(picked);
  cert.hitting_set = hs.best;
  std::sort(cert.hitting_set.begin(), cert.hitting_set.end());
  cert.af = static_cast<int>(cert.hitting_set.size());

  if (cert.af != static_cast<int>(cert.compatible_cycles.size()))
    throw InternalError("certificate gap: hitting set and compatible family sizes differ");
  if (!is_antiforcing_set(g, m, cert.hitting_set))
    throw InternalError("minimum hitting set is not an anti-forcing set");
  return cert;
}

int c_prime(const MolecularGraph& g, const Matching& m, const OracleLimits& limits) {
  std::vector<AlternatingCycle> cycles = alternating_cycles(g, m, limits);
  std::vector<char> in_m = edge_mask(g, m.edges);
  std::vector<CycleInfo> infos = cycle_infos(g, in_m, cycles);
  return static_cast<int>(max_compatible_family(g, in_m, infos).size());
}

int fries_number(const MolecularGraph& g, const OracleLimits& limits) {
  int best = 0;
  for (const Matching& m : enumerate_perfect_matchings(g, limits)) {
    std::vector<char> in_m = edge_mask(g, m.edges);
    int count = 0;
    for (const auto& face : g.hexagon_faces) {
      bool even = in_m[face[0]] && in_m[face[2]] && in_m[face[4]];
      bool odd = in_m[face[1]] && in_m[face[3]] && in_m[face[5]];
      count += even || odd;
    }
    best = std::max(best, count);
  }
  return best;
}

bool check_vertical_edge_rule(const MolecularGraph& g, const Matching& m) {
  std::vector<char> in_m = edge_mask(g, m.edges);
  for (const std::vector<int>& ve : g.vertical_edges) {
    int hits = 0;
    for (int e : ve) hits += in_m[e];
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace afpoly
