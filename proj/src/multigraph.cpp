#include "flowroots/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace flowroots {

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
  }
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

int MultiGraph::loop_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.is_loop(); }));
}

std::vector<std::vector<int>> MultiGraph::incidence() const {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_));
  for (int i = 0; i < edge_count(); ++i) {
    inc[edges_[i].u].push_back(i);
    inc[edges_[i].v].push_back(i);
  }
  return inc;
}

MultiGraph make_loop_graph() { return MultiGraph(1, {{0, 0}}); }

MultiGraph make_bond(int k) {
  return MultiGraph(2, std::vector<Edge>(static_cast<std::size_t>(k), Edge{0, 1}));
}

MultiGraph make_cycle(int n) {
  if (n == 1) return make_loop_graph();
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return MultiGraph(n, std::move(es));
}

MultiGraph make_complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return MultiGraph(n, std::move(es));
}

MultiGraph make_path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return MultiGraph(n, std::move(es));
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  std::vector<Edge> es = a.edges();
  const int off = a.vertex_count();
  for (const Edge& e : b.edges()) es.push_back({e.u + off, e.v + off});
  return MultiGraph(a.vertex_count() + b.vertex_count(), std::move(es));
}

MultiGraph delete_edge(const MultiGraph& g, int i) {
  if (i < 0 || i >= g.edge_count()) throw GraphError("edge index out of range");
  std::vector<Edge> es = g.edges();
  es.erase(es.begin() + i);
  return MultiGraph(g.vertex_count(), std::move(es));
}

MultiGraph delete_edges(const MultiGraph& g, std::span<const int> indices) {
  std::vector<bool> drop(static_cast<std::size_t>(g.edge_count()), false);
  for (int i : indices) {
    if (i < 0 || i >= g.edge_count()) throw GraphError("edge index out of range");
    drop[i] = true;
  }
  std::vector<Edge> es;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!drop[i]) es.push_back(g.edge(i));
  return MultiGraph(g.vertex_count(), std::move(es));
}

MultiGraph contract_edge(const MultiGraph& g, int i) {
  if (i < 0 || i >= g.edge_count()) throw GraphError("edge index out of range");
  const Edge c = g.edge(i);
  if (c.is_loop()) throw GraphError("cannot contract a loop");
  const int keep = std::min(c.u, c.v);
  const int gone = std::max(c.u, c.v);
  auto map = [&](int x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> es;
  es.reserve(g.edges().size() - 1);
  for (int j = 0; j < g.edge_count(); ++j) {
    if (j == i) continue;
    es.push_back({map(g.edge(j).u), map(g.edge(j).v)});
  }
  return MultiGraph(g.vertex_count() - 1, std::move(es));
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) index[sorted[k]] = static_cast<int>(k);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) es.push_back({index[e.u], index[e.v]});
  return MultiGraph(static_cast<int>(sorted.size()), std::move(es));
}

MultiGraph contract_vertex_set(const MultiGraph& g, const std::vector<bool>& side) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!side[v]) index[v] = next++;
  const int merged = next;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const bool in_u = side[e.u];
    const bool in_v = side[e.v];
    if (in_u && in_v) continue;
    es.push_back({in_u ? merged : index[e.u], in_v ? merged : index[e.v]});
  }
  return MultiGraph(merged + 1, std::move(es));
}

MultiGraph simplify(const MultiGraph& g) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    Edge s{std::min(e.u, e.v), std::max(e.u, e.v)};
    es.push_back(s);
  }
  std::sort(es.begin(), es.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return MultiGraph(g.vertex_count(), std::move(es));
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Lowpoint DFS shared by blocks, bridges and cut vertices. Parallel edges are
// distinguished by edge id, so only the tree edge itself is skipped.
struct LowpointSearch {
  const MultiGraph& g;
  std::vector<std::vector<int>> inc;
  std::vector<int> disc, low;
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> block_edges;
  std::vector<int> bridge_list;
  std::vector<bool> is_cut;
  int timer = 0;

  explicit LowpointSearch(const MultiGraph& graph)
      : g(graph),
        inc(static_cast<std::size_t>(graph.vertex_count())),
        disc(static_cast<std::size_t>(graph.vertex_count()), -1),
        low(static_cast<std::size_t>(graph.vertex_count()), 0),
        is_cut(static_cast<std::size_t>(graph.vertex_count()), false) {
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (e.is_loop()) continue;
      inc[e.u].push_back(i);
      inc[e.v].push_back(i);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      if (disc[v] < 0) visit(v, -1);
  }

  void visit(int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int e : inc[v]) {
      if (e == parent_edge) continue;
      const int w = g.edge(e).other(v);
      if (disc[w] < 0) {
        ++children;
        edge_stack.push_back(e);
        visit(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent_edge >= 0) is_cut[v] = true;
          std::vector<int> blk;
          while (true) {
            const int top = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(top);
            if (top == e) break;
          }
          block_edges.push_back(std::move(blk));
        }
        if (low[w] > disc[v]) bridge_list.push_back(e);
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent_edge < 0 && children >= 2) is_cut[v] = true;
  }
};

}  // namespace

std::vector<int> component_labels(const MultiGraph& g, int* count) {
  DisjointSets ds(g.vertex_count());
  for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> root_label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int r = ds.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (count) *count = next;
  return label;
}

int component_count(const MultiGraph& g) {
  int c = 0;
  component_labels(g, &c);
  return c;
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

std::vector<MultiGraph> components(const MultiGraph& g) {
  int count = 0;
  const auto label = component_labels(g, &count);
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()));
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < g.vertex_count(); ++v) local[v] = sizes[label[v]]++;
  std::vector<std::vector<Edge>> es(static_cast<std::size_t>(count));
  for (const Edge& e : g.edges()) es[label[e.u]].push_back({local[e.u], local[e.v]});
  std::vector<MultiGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) out.emplace_back(sizes[c], std::move(es[c]));
  return out;
}

std::vector<Block> blocks(const MultiGraph& g) {
  LowpointSearch search(g);
  std::vector<Block> out;
  auto make_block = [&](std::vector<int> edge_ids) {
    std::sort(edge_ids.begin(), edge_ids.end());
    std::vector<int> verts;
    for (int e : edge_ids) {
      verts.push_back(g.edge(e).u);
      verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Edge> es;
    for (int e : edge_ids) {
      const auto iu = std::lower_bound(verts.begin(), verts.end(), g.edge(e).u) - verts.begin();
      const auto iv = std::lower_bound(verts.begin(), verts.end(), g.edge(e).v) - verts.begin();
      es.push_back({static_cast<int>(iu), static_cast<int>(iv)});
    }
    Block b{MultiGraph(static_cast<int>(verts.size()), std::move(es)), verts, edge_ids};
    out.push_back(std::move(b));
  };
  for (auto& be : search.block_edges) make_block(std::move(be));
  for (int i = 0; i < g.edge_count(); ++i)
    if (g.edge(i).is_loop()) make_block({i});
  const auto deg = g.degrees();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[v] == 0) out.push_back(Block{MultiGraph(1), {v}, {}});
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    if (a.edge_map.empty() || b.edge_map.empty()) {
      if (a.edge_map.empty() != b.edge_map.empty()) return b.edge_map.empty();
      return a.vertex_map < b.vertex_map;
    }
    return a.edge_map.front() < b.edge_map.front();
  });
  return out;
}

int block_count(const MultiGraph& g) { return static_cast<int>(blocks(g).size()); }

std::vector<int> bridges(const MultiGraph& g) {
  LowpointSearch search(g);
  std::sort(search.bridge_list.begin(), search.bridge_list.end());
  return search.bridge_list;
}

bool is_bridgeless(const MultiGraph& g) { return bridges(g).empty(); }

std::vector<int> cut_vertices(const MultiGraph& g) {
  LowpointSearch search(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (search.is_cut[v]) out.push_back(v);
  return out;
}

bool is_nonseparable(const MultiGraph& g) {
  if (g.vertex_count() == 1 && g.edge_count() == 1) return g.edge(0).is_loop();
  if (!is_connected(g) || g.has_loop()) return false;
  return cut_vertices(g).empty();
}

int find_two_cut_edge(const MultiGraph& g) {
  for (int i = 0; i < g.edge_count(); ++i) {
    if (g.edge(i).is_loop()) continue;
    if (!bridges(delete_edge(g, i)).empty()) return i;
  }
  return -1;
}

bool is_3_edge_connected(const MultiGraph& g) {
  return is_connected(g) && is_bridgeless(g) && find_two_cut_edge(g) < 0;
}

MultiGraph relabel(const MultiGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw GraphError("permutation size mismatch");
  std::vector<Edge> es;
  es.reserve(g.edges().size());
  for (const Edge& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return MultiGraph(g.vertex_count(), std::move(es));
}

}  // namespace flowroots
