#include <algorithm>
#include <functional>
#include <numeric>

#include "flowroots/multigraph.hpp"

namespace flowroots {

namespace {

// Tests whether `chosen` (edge indices) is the crossing set of a bipartition
// of the connected graph g. On success fills side/proper.
bool classify_subset(const MultiGraph& g, const std::vector<int>& chosen,
                     std::vector<bool>& in_subset, EdgeCut* out) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> rest_degree(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (in_subset[i]) continue;
    const Edge& e = g.edge(i);
    rest_degree[e.u]++;
    rest_degree[e.v]++;
    parent[find(e.u)] = find(e.v);
  }
  for (int i : chosen)
    if (find(g.edge(i).u) == find(g.edge(i).v)) return false;

  // 2-colour the component graph whose edges are the chosen ones.
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i : chosen) {
    const int a = find(g.edge(i).u);
    const int b = find(g.edge(i).v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const int start = find(0);
  colour[start] = 0;
  std::vector<int> queue{start};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int c = queue[h];
    for (int d : adj[c]) {
      if (colour[d] < 0) {
        colour[d] = 1 - colour[c];
        queue.push_back(d);
      } else if (colour[d] == colour[c]) {
        return false;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (colour[find(v)] < 0) return false;  // disconnected input

  if (out) {
    out->edge_indices = chosen;
    out->side.assign(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) out->side[v] = colour[find(v)] == 0;
    out->proper = std::none_of(rest_degree.begin(), rest_degree.end(),
                               [](int d) { return d == 0; });
  }
  return true;
}

// Calls visit for every cut of the given size; stops early when visit
// returns false.
void for_each_cut(const MultiGraph& g, int size, const std::function<bool(const EdgeCut&)>& visit) {
  if (size <= 0 || g.vertex_count() < 2) return;
  std::vector<int> candidates;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!g.edge(i).is_loop()) candidates.push_back(i);
  const int c = static_cast<int>(candidates.size());
  if (c < size) return;
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<bool> in_subset(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<int> chosen(static_cast<std::size_t>(size));
  EdgeCut cut;
  while (true) {
    for (int k = 0; k < size; ++k) {
      chosen[k] = candidates[pick[k]];
      in_subset[chosen[k]] = true;
    }
    const bool ok = classify_subset(g, chosen, in_subset, &cut);
    for (int k = 0; k < size; ++k) in_subset[chosen[k]] = false;
    if (ok && !visit(cut)) return;
    int k = size - 1;
    while (k >= 0 && pick[k] == c - size + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<EdgeCut> edge_cuts(const MultiGraph& g, int size) {
  std::vector<EdgeCut> out;
  for_each_cut(g, size, [&](const EdgeCut& cut) {
    out.push_back(cut);
    return true;
  });
  return out;
}

bool find_proper_three_cut(const MultiGraph& g, EdgeCut* out) {
  bool found = false;
  for_each_cut(g, 3, [&](const EdgeCut& cut) {
    if (!cut.proper) return true;
    found = true;
    if (out) *out = cut;
    return false;
  });
  return found;
}

}  // namespace flowroots
