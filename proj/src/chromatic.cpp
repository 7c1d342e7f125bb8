#include <unordered_map>

#include "flowroots/flow.hpp"

namespace flowroots {

namespace {

class ChromaticSolver {
 public:
  IntPoly solve(const MultiGraph& simple) {
    const int n = simple.vertex_count();
    const int m = simple.edge_count();
    if (m == 0) return IntPoly::monomial(1, n);
    if (2 * m == n * (n - 1)) return IntPoly::falling_factorial(n);

    int comps = 0;
    component_labels(simple, &comps);
    if (comps > 1) {
      IntPoly out = IntPoly::constant(1);
      for (const MultiGraph& c : components(simple)) out *= solve(c);
      return out;
    }

    const std::string key = canonical_code(simple);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPoly out;
    const auto bs = blocks(simple);
    if (bs.size() > 1) {
      // Blocks glued at cut vertices: P(G) = prod P(B) / x^(b-1).
      out = IntPoly::constant(1);
      for (const Block& b : bs) out *= solve(b.graph);
      out = exact_divide(out, IntPoly::monomial(1, static_cast<int>(bs.size()) - 1));
    } else if (4 * m > n * (n - 1)) {
      // Dense: add a missing edge, P(G) = P(G + uv) + P(G / uv).
      std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
      for (const Edge& e : simple.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
      int bu = -1, bv = -1, best_common = -1;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (adj[u][v]) continue;
          int common = 0;
          for (int w = 0; w < n; ++w) common += adj[u][w] && adj[v][w];
          if (common > best_common) {
            best_common = common;
            bu = u;
            bv = v;
          }
        }
      }
      std::vector<Edge> added = simple.edges();
      added.push_back({bu, bv});
      const MultiGraph with_edge(n, added);
      const MultiGraph merged = simplify(contract_edge(with_edge, static_cast<int>(added.size()) - 1));
      out = solve(with_edge) + solve(merged);
    } else {
      // Sparse: P(G) = P(G - e) - P(G / e), pivot at a maximum-degree vertex.
      const auto deg = simple.degrees();
      int pivot = 0;
      for (int i = 1; i < m; ++i) {
        const Edge& a = simple.edge(i);
        const Edge& b = simple.edge(pivot);
        if (deg[a.u] + deg[a.v] > deg[b.u] + deg[b.v]) pivot = i;
      }
      out = solve(delete_edge(simple, pivot)) - solve(simplify(contract_edge(simple, pivot)));
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  std::unordered_map<std::string, IntPoly> memo_;
};

}  // namespace

IntPoly chromatic_poly(const MultiGraph& g) {
  if (g.has_loop()) return IntPoly();
  ChromaticSolver solver;
  return solver.solve(simplify(g));
}

}  // namespace flowroots
