#include "flowroots/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_set>

namespace flowroots {

namespace {

// Children of one parent: an extra edge between existing vertices or to a
// new pendant vertex.
void extend(const MultiGraph& g, const EnumerationBounds& b, std::unordered_set<std::string>& out) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    mult[e.u][e.v]++;
    if (!e.is_loop()) mult[e.v][e.u]++;
  }
  std::vector<Edge> edges = g.edges();
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      if (u == v && !b.loops) continue;
      if (mult[u][v] >= b.max_multiplicity) continue;
      edges.push_back({u, v});
      out.insert(canonical_code(MultiGraph(n, edges)));
      edges.pop_back();
    }
  }
  if (n < b.max_vertices) {
    for (int v = 0; v < n; ++v) {
      edges.push_back({v, n});
      out.insert(canonical_code(MultiGraph(n + 1, edges)));
      edges.pop_back();
    }
  }
}

}  // namespace

double estimate_work(const EnumerationBounds& b) {
  double total = 0;
  for (int n = 1; n <= b.max_vertices; ++n) {
    const int slots = n * (n - 1) / 2 + (b.loops ? n : 0);
    // ways[j] = labelled multigraphs with j edges, each slot used at most cap times
    std::vector<double> ways(static_cast<std::size_t>(b.max_edges) + 1, 0.0);
    ways[0] = 1;
    for (int s = 0; s < slots; ++s) {
      std::vector<double> next(ways.size(), 0.0);
      for (std::size_t j = 0; j < ways.size(); ++j) {
        if (ways[j] == 0) continue;
        for (int t = 0; t <= b.max_multiplicity && j + static_cast<std::size_t>(t) < ways.size(); ++t)
          next[j + static_cast<std::size_t>(t)] += ways[j];
      }
      ways = std::move(next);
    }
    double labelled = 0;
    for (double w : ways) labelled += w;
    total += labelled / std::tgamma(n + 1.0) * (slots + n);
  }
  return total;
}

void enumerate_connected(const EnumerationBounds& b,
                         const std::function<void(int m, const std::vector<std::string>& codes)>& visit,
                         int workers) {
  if (b.max_vertices < 1 || b.max_edges < 0 || b.max_multiplicity < 1)
    throw std::invalid_argument("enumeration bounds must be positive");
  if (b.max_vertices > 16) throw std::invalid_argument("at most 16 vertices");
  workers = std::max(1, workers);

  std::vector<std::string> level{canonical_code(MultiGraph(1, {}))};
  for (int m = 0;; ++m) {
    visit(m, level);
    if (m == b.max_edges) break;

    std::vector<std::unordered_set<std::string>> found(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
      for (std::size_t i = static_cast<std::size_t>(w); i < level.size(); i += static_cast<std::size_t>(workers))
        extend(graph_from_code(level[i]), b, found[static_cast<std::size_t>(w)]);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    std::vector<std::string> next;
    for (auto& set : found) {
      next.insert(next.end(), set.begin(), set.end());
      set.clear();
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) break;
    level = std::move(next);
  }
}

std::vector<MultiGraph> enumerate_connected_list(const EnumerationBounds& b, int workers) {
  std::vector<MultiGraph> out;
  enumerate_connected(
      b, [&](int, const std::vector<std::string>& codes) {
        for (const auto& c : codes) out.push_back(graph_from_code(c));
      },
      workers);
  return out;
}

}  // namespace flowroots
