#include <algorithm>
#include <string>

#include "flowroots/multigraph.hpp"

namespace flowroots {

void validate_faces(const MultiGraph& g, const FaceStructure& faces) {
  std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    for (int e : faces.faces[f]) {
      if (e < 0 || e >= g.edge_count()) {
        throw GraphError("face " + std::to_string(f) + " lists unknown edge " + std::to_string(e));
      }
      ++seen[e];
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (seen[e] != 2) {
      throw GraphError("edge " + std::to_string(e) + " appears " + std::to_string(seen[e]) +
                       " times across faces (expected 2)");
    }
  }
  if (!is_connected(g)) throw GraphError("plane graph must be connected");
  const int euler = g.vertex_count() - g.edge_count() + static_cast<int>(faces.faces.size());
  if (euler != 2) {
    throw GraphError("Euler check failed: n - m + f = " + std::to_string(euler));
  }
}

MultiGraph build_dual(const MultiGraph& g, const FaceStructure& faces) {
  validate_faces(g, faces);
  std::vector<std::vector<int>> owner(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t f = 0; f < faces.faces.size(); ++f)
    for (int e : faces.faces[f]) owner[e].push_back(static_cast<int>(f));
  std::vector<Edge> es;
  es.reserve(owner.size());
  for (const auto& o : owner) es.push_back({o[0], o[1]});
  return MultiGraph(static_cast<int>(faces.faces.size()), std::move(es));
}

FaceStructure dual_faces(const MultiGraph& g) { return FaceStructure{g.incidence()}; }

bool is_chordal(const MultiGraph& g) {
  const MultiGraph s = simplify(g);
  const int n = s.vertex_count();
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const Edge& e : s.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;

  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    visited[best] = true;
    order.push_back(best);
    for (int w = 0; w < n; ++w)
      if (adj[best][w] && !visited[w]) ++weight[w];
  }
  std::reverse(order.begin(), order.end());
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<int> later;
    for (int w = 0; w < n; ++w)
      if (adj[v][w] && position[w] > i) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!adj[later[a]][later[b]]) return false;
  }
  return true;
}

}  // namespace flowroots
