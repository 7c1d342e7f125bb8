#pragma once

// Random graph generators and brute-force oracles shared by the test
// binaries. Oracles deliberately avoid the library's own algorithms.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flowroots/multigraph.hpp"

namespace testsupport {

using flowroots::Edge;
using flowroots::MultiGraph;

/// Random connected multigraph: a random spanning tree plus extra random
/// edges (loops allowed when `loops` is set).
inline MultiGraph random_connected(std::mt19937& rng, int n, int m, bool loops = true) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(edges.size()) < m) {
    const int u = pick(rng), v = pick(rng);
    if (u == v && !loops) continue;
    edges.push_back({u, v});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return MultiGraph(n, std::move(edges));
}

/// Bridges by definition: deleting the edge raises the component count.
inline std::vector<int> brute_bridges(const MultiGraph& g) {
  std::vector<int> out;
  const int base = flowroots::component_count(g);
  for (int i = 0; i < g.edge_count(); ++i)
    if (flowroots::component_count(flowroots::delete_edge(g, i)) > base) out.push_back(i);
  return out;
}

/// Random connected bridgeless multigraph: doubles every bridge of a random
/// connected graph.
inline MultiGraph random_bridgeless(std::mt19937& rng, int n, int m, bool loops = true) {
  MultiGraph g = random_connected(rng, n, m, loops);
  std::vector<Edge> edges = g.edges();
  for (int i : brute_bridges(g)) edges.push_back(g.edge(i));
  return MultiGraph(n, std::move(edges));
}

/// Multiplicity matrix (diagonal counts loops).
inline std::vector<std::vector<int>> matrix(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    a[e.u][e.v]++;
    if (e.u != e.v) a[e.v][e.u]++;
  }
  return a;
}

/// Isomorphism by trying every vertex permutation.
inline bool brute_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto ma = matrix(a), mb = matrix(b);
  std::vector<int> p(static_cast<std::size_t>(a.vertex_count()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < p.size() && same; ++i)
      for (std::size_t j = 0; j < p.size() && same; ++j) same = ma[i][j] == mb[p[i]][p[j]];
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Distinct edge sets of the given size that cross some bipartition of V
/// into two non-empty parts.
inline std::set<std::vector<int>> brute_edge_cuts(const MultiGraph& g, int size) {
  std::set<std::vector<int>> out;
  const int n = g.vertex_count();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    if (mask & 1u) continue;  // each bipartition once: vertex 0 on the zero side
    std::vector<int> crossing;
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) crossing.push_back(i);
    }
    if (static_cast<int>(crossing.size()) == size) out.insert(crossing);
  }
  return out;
}

/// Vertices whose removal (with incident edges) increases the number of
/// components among the remaining vertices.
inline std::vector<int> brute_cut_vertices(const MultiGraph& g) {
  std::vector<int> out;
  const int n = g.vertex_count();
  const int base = flowroots::component_count(g);
  for (int v = 0; v < n; ++v) {
    std::vector<int> keep;
    for (int w = 0; w < n; ++w)
      if (w != v) keep.push_back(w);
    if (flowroots::component_count(flowroots::induced_subgraph(g, keep)) > base) out.push_back(v);
  }
  return out;
}

/// Non-isomorphic connected multigraphs with n <= max_n vertices, 0 < m <= max_m
/// edges and at most max_mult parallel copies per vertex pair (loops count
/// at their vertex), found by listing labelled graphs and pairwise testing.
inline std::vector<MultiGraph> brute_connected_classes(int max_n, int max_m, int max_mult) {
  std::vector<MultiGraph> reps;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) slots.push_back({u, v});
    std::vector<int> mult(slots.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == max_mult) mult[i++] = 0;
      if (i == mult.size()) break;
      mult[i]++;
      const int m = std::accumulate(mult.begin(), mult.end(), 0);
      if (m > max_m) continue;
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s)
        for (int t = 0; t < mult[s]; ++t) edges.push_back({slots[s].first, slots[s].second});
      MultiGraph g(n, std::move(edges));
      if (!flowroots::is_connected(g)) continue;
      bool seen = false;
      for (const auto& r : reps)
        if (brute_isomorphic(r, g)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(g);
    }
  }
  return reps;
}

/// Identifies vertex `a` of g1 with vertex `b` of g2.
inline MultiGraph glue_at_vertex(const MultiGraph& g1, int a, const MultiGraph& g2, int b) {
  const int n1 = g1.vertex_count();
  auto map2 = [&](int v) { return v == b ? a : (v < b ? n1 + v : n1 + v - 1); };
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({map2(e.u), map2(e.v)});
  return MultiGraph(n1 + g2.vertex_count() - 1, std::move(edges));
}

}  // namespace testsupport
