// Canonical codes by permutation minimisation. Vertices are first split
// into colour classes by iterated degree refinement; the search then only
// places vertices of class c at the positions reserved for class c, and
// abandons a branch as soon as its partial code exceeds the best one found.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "flowroots/multigraph.hpp"

namespace flowroots {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      a[e.u][e.u]++;
    } else {
      a[e.u][e.v]++;
      a[e.v][e.u]++;
    }
  }
  return a;
}

std::vector<int> refine_colours(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  std::vector<int> colour(static_cast<std::size_t>(n));
  {
    std::vector<std::pair<int, int>> init(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      int deg = 2 * a[v][v];
      for (int w = 0; w < n; ++w)
        if (w != v) deg += a[v][w];
      init[v] = {deg, a[v][v]};
    }
    auto sorted = init;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), init[v]) - sorted.begin());
  }
  int classes = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  while (true) {
    std::vector<Signature> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int w = 0; w < n; ++w)
        if (w != v && a[v][w] > 0) sig[v].second.emplace_back(colour[w], a[v][w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int next_classes = static_cast<int>(sorted.size());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

class Minimiser {
 public:
  Minimiser(const Matrix& a, std::vector<int> colour) : a_(a), colour_(std::move(colour)) {
    const int n = static_cast<int>(a_.size());
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    perm_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), false);
    current_.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
  }

  std::string run() {
    search(0, false);
    return best_;
  }

 private:
  // `less` means the current prefix is already strictly below best_.
  void search(int pos, bool less) {
    const int n = static_cast<int>(a_.size());
    if (pos == n) {
      if (!have_best_ || less) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[pos]) continue;
      perm_[pos] = v;
      const std::size_t base = current_.size();
      bool now_less = less;
      bool prune = false;
      for (int j = 0; j <= pos; ++j) {
        const int entry = a_[v][perm_[j]];
        if (entry > 255) throw GraphError("edge multiplicity too large for canonical code");
        const char byte = static_cast<char>(static_cast<unsigned char>(entry));
        current_.push_back(byte);
        if (have_best_ && !now_less) {
          const auto b = static_cast<unsigned char>(best_[current_.size() - 1]);
          const auto c = static_cast<unsigned char>(byte);
          if (c < b) {
            now_less = true;
          } else if (c > b) {
            prune = true;
            break;
          }
        }
      }
      if (!prune) {
        used_[v] = true;
        search(pos + 1, now_less);
        used_[v] = false;
      }
      current_.resize(base);
    }
  }

  const Matrix& a_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::string current_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_code(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 255) throw GraphError("graph too large for canonical code");
  const Matrix a = multiplicity_matrix(g);
  auto colour = refine_colours(a);
  std::string code(1, static_cast<char>(static_cast<unsigned char>(n)));
  if (n == 0) return code;
  code += Minimiser(a, std::move(colour)).run();
  return code;
}

MultiGraph graph_from_code(const std::string& code) {
  if (code.empty()) throw GraphError("empty canonical code");
  const int n = static_cast<unsigned char>(code[0]);
  if (code.size() != 1 + static_cast<std::size_t>(n) * (n + 1) / 2) throw GraphError("malformed canonical code");
  std::vector<Edge> edges;
  std::size_t at = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const int mult = static_cast<unsigned char>(code[at++]);
      for (int t = 0; t < mult; ++t) edges.push_back({j, i});
    }
  }
  return MultiGraph(n, std::move(edges));
}

}  // namespace flowroots
