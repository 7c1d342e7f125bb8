#include "flowroots/flow.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flowroots {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::empty: return "empty";
    case Rule::bridge_zero: return "bridge-zero";
    case Rule::component_split: return "component-split";
    case Rule::block_split: return "block-split";
    case Rule::loop_factor: return "loop-factor";
    case Rule::two_cut_contract: return "two-cut-contract";
    case Rule::three_cut_split: return "three-cut-split";
    case Rule::vertex_edge_split: return "vertex-edge-split";
    case Rule::delete_contract: return "delete-contract";
    case Rule::memo_hit: return "memo-hit";
  }
  return "?";
}

std::string ReductionTrace::to_text() const {
  std::ostringstream os;
  if (root < 0) return {};
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const TraceNode& t = nodes[static_cast<std::size_t>(id)];
    os << std::string(static_cast<std::size_t>(2 * t.depth), ' ') << rule_name(t.rule) << " n=" << t.vertices
       << " m=" << t.edges << " -> " << t.value.to_string("x") << '\n';
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) stack.push_back(*it);
  }
  return os.str();
}

namespace {

const IntPoly& x_minus_1() {
  static const IntPoly p = IntPoly::linear_factor(1);
  return p;
}

const IntPoly& x_minus_1_times_x_minus_2() {
  static const IntPoly p = IntPoly::linear_factor(1) * IntPoly::linear_factor(2);
  return p;
}

IntPoly replay_node(const ReductionTrace& trace, int id) {
  const TraceNode& t = trace.nodes.at(static_cast<std::size_t>(id));
  std::vector<IntPoly> kids;
  for (int c : t.children) kids.push_back(replay_node(trace, c));
  IntPoly out;
  switch (t.rule) {
    case Rule::empty: out = IntPoly::constant(1); break;
    case Rule::bridge_zero: out = IntPoly(); break;
    case Rule::component_split:
    case Rule::block_split:
      out = IntPoly::constant(1);
      for (const auto& k : kids) out *= k;
      break;
    case Rule::loop_factor: out = x_minus_1() * kids.at(0); break;
    case Rule::two_cut_contract: out = kids.at(0); break;
    case Rule::three_cut_split: out = exact_divide(kids.at(0) * kids.at(1), x_minus_1_times_x_minus_2()); break;
    case Rule::vertex_edge_split: out = exact_divide(kids.at(0) * kids.at(1), x_minus_1()); break;
    case Rule::delete_contract: out = kids.at(0) - kids.at(1); break;
    case Rule::memo_hit: out = t.value; break;
  }
  if (!(out == t.value)) throw std::logic_error(std::string("trace replay mismatch at ") + rule_name(t.rule));
  return out;
}

int push_node(ReductionTrace* trace, Rule rule, int depth, const MultiGraph& g) {
  if (!trace) return -1;
  TraceNode t;
  t.rule = rule;
  t.depth = depth;
  t.vertices = g.vertex_count();
  t.edges = g.edge_count();
  trace->nodes.push_back(std::move(t));
  return static_cast<int>(trace->nodes.size()) - 1;
}

void finish_node(ReductionTrace* trace, int id, std::vector<int> kids, const IntPoly& value) {
  if (!trace || id < 0) return;
  trace->nodes[static_cast<std::size_t>(id)].children = std::move(kids);
  trace->nodes[static_cast<std::size_t>(id)].value = value;
}

// Edge from the largest parallel class; ties go to the smallest endpoint pair.
int choose_pivot(const MultiGraph& g) {
  std::map<std::pair<int, int>, std::pair<int, int>> classes;  // pair -> (count, first index)
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.is_loop()) continue;
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    auto [it, inserted] = classes.try_emplace(key, 0, i);
    it->second.first++;
  }
  int best = -1;
  int best_count = 0;
  for (const auto& [key, val] : classes) {
    if (val.first > best_count) {
      best_count = val.first;
      best = val.second;
    }
  }
  return best;
}

struct VertexEdgeSplit {
  MultiGraph g1;
  MultiGraph g2;
};

// Looks for an edge e = u1u2 with G - e separable and builds G_1 = H_1 + v u1,
// G_2 = H_2 + v u2 around a cut vertex v of G - e. Expects G non-separable
// and loopless, so every cut vertex of G - e separates u1 from u2.
bool find_vertex_edge_split(const MultiGraph& g, VertexEdgeSplit* out) {
  for (int i = 0; i < g.edge_count(); ++i) {
    const MultiGraph h = delete_edge(g, i);
    const auto cuts = cut_vertices(h);
    if (cuts.empty()) continue;
    const int v = cuts.front();
    const int u1 = g.edge(i).u;
    const int u2 = g.edge(i).v;
    // Components of h - v.
    std::vector<Edge> rest;
    for (const Edge& e : h.edges())
      if (e.u != v && e.v != v) rest.push_back(e);
    const auto label = component_labels(MultiGraph(h.vertex_count(), rest));
    std::vector<int> side1, side2;
    for (int w = 0; w < h.vertex_count(); ++w) {
      if (w == v) continue;
      (label[w] == label[u1] ? side1 : side2).push_back(w);
    }
    if (std::find(side2.begin(), side2.end(), u2) == side2.end()) {
      throw std::logic_error("cut vertex of G - e does not separate the ends of e");
    }
    side1.push_back(v);
    side2.push_back(v);
    auto build = [&](std::vector<int> verts, int u) {
      std::sort(verts.begin(), verts.end());
      MultiGraph sub = induced_subgraph(h, verts);
      auto idx = [&](int x) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
      };
      std::vector<Edge> es = sub.edges();
      es.push_back({idx(v), idx(u)});
      return MultiGraph(sub.vertex_count(), std::move(es));
    };
    out->g1 = build(side1, u1);
    out->g2 = build(side2, u2);
    return true;
  }
  return false;
}

}  // namespace

IntPoly replay(const ReductionTrace& trace) {
  if (trace.root < 0) throw std::logic_error("empty trace");
  return replay_node(trace, trace.root);
}

IntPoly FlowEngine::flow_poly(const MultiGraph& g, ReductionTrace* trace) {
  if (trace) *trace = ReductionTrace{};
  int root = -1;
  IntPoly out = eval(g, 0, trace, &root);
  if (trace) trace->root = root;
  return out;
}

IntPoly FlowEngine::eval(const MultiGraph& g, int depth, ReductionTrace* trace, int* node) {
  ++stats_.calls;
  if (g.edge_count() == 0) {
    *node = push_node(trace, Rule::empty, depth, g);
    IntPoly one = IntPoly::constant(1);
    finish_node(trace, *node, {}, one);
    return one;
  }
  if (!is_bridgeless(g)) {
    *node = push_node(trace, Rule::bridge_zero, depth, g);
    finish_node(trace, *node, {}, IntPoly());
    return IntPoly();
  }

  int comp_count = 0;
  component_labels(g, &comp_count);
  if (comp_count > 1) {
    *node = push_node(trace, Rule::component_split, depth, g);
    std::vector<int> kids;
    IntPoly out = IntPoly::constant(1);
    for (const MultiGraph& c : components(g)) {
      if (c.edge_count() == 0) continue;
      int kid = -1;
      out *= eval(c, depth + 1, trace, &kid);
      kids.push_back(kid);
    }
    finish_node(trace, *node, std::move(kids), out);
    return out;
  }

  auto bs = blocks(g);
  if (bs.size() > 1) {
    *node = push_node(trace, Rule::block_split, depth, g);
    std::vector<int> kids;
    IntPoly out = IntPoly::constant(1);
    for (const Block& b : bs) {
      int kid = -1;
      out *= eval(b.graph, depth + 1, trace, &kid);
      kids.push_back(kid);
    }
    finish_node(trace, *node, std::move(kids), out);
    return out;
  }
  return eval_block(g, depth, trace, node);
}

IntPoly FlowEngine::eval_block(const MultiGraph& g, int depth, ReductionTrace* trace, int* node) {
  if (g.vertex_count() == 1) {
    // A non-separable graph with a loop is L itself.
    *node = push_node(trace, Rule::loop_factor, depth, g);
    int kid = -1;
    IntPoly out = x_minus_1() * eval(delete_edge(g, 0), depth + 1, trace, &kid);
    finish_node(trace, *node, {kid}, out);
    return out;
  }

  std::string key;
  const bool memo = opts_.use_memo && g.vertex_count() <= opts_.memo_vertex_limit;
  if (memo) {
    key = canonical_code(g);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      *node = push_node(trace, Rule::memo_hit, depth, g);
      finish_node(trace, *node, {}, it->second);
      return it->second;
    }
  }

  IntPoly out;
  if (const int e = find_two_cut_edge(g); e >= 0) {
    *node = push_node(trace, Rule::two_cut_contract, depth, g);
    int kid = -1;
    out = eval(contract_edge(g, e), depth + 1, trace, &kid);
    finish_node(trace, *node, {kid}, out);
  } else if (EdgeCut cut; find_proper_three_cut(g, &cut)) {
    ++stats_.lemma_splits;
    *node = push_node(trace, Rule::three_cut_split, depth, g);
    std::vector<bool> other(cut.side.size());
    for (std::size_t v = 0; v < other.size(); ++v) other[v] = !cut.side[v];
    const MultiGraph g1 = contract_vertex_set(g, other);     // keeps side V1
    const MultiGraph g2 = contract_vertex_set(g, cut.side);  // keeps side V2
    int k1 = -1, k2 = -1;
    const IntPoly f1 = eval(g1, depth + 1, trace, &k1);
    const IntPoly f2 = eval(g2, depth + 1, trace, &k2);
    out = exact_divide(f1 * f2, x_minus_1_times_x_minus_2());
    finish_node(trace, *node, {k1, k2}, out);
  } else if (VertexEdgeSplit split; find_vertex_edge_split(g, &split)) {
    ++stats_.lemma_splits;
    *node = push_node(trace, Rule::vertex_edge_split, depth, g);
    int k1 = -1, k2 = -1;
    const IntPoly f1 = eval(split.g1, depth + 1, trace, &k1);
    const IntPoly f2 = eval(split.g2, depth + 1, trace, &k2);
    out = exact_divide(f1 * f2, x_minus_1());
    finish_node(trace, *node, {k1, k2}, out);
  } else {
    ++stats_.delete_contract;
    *node = push_node(trace, Rule::delete_contract, depth, g);
    const int e = choose_pivot(g);
    int k1 = -1, k2 = -1;
    const IntPoly contracted = eval(contract_edge(g, e), depth + 1, trace, &k1);
    const IntPoly deleted = eval(delete_edge(g, e), depth + 1, trace, &k2);
    out = contracted - deleted;
    finish_node(trace, *node, {k1, k2}, out);
  }
  if (memo) memo_.emplace(std::move(key), out);
  return out;
}

IntPoly flow_poly(const MultiGraph& g, ReductionTrace* trace) {
  FlowEngine engine;
  return engine.flow_poly(g, trace);
}

IntPoly flow_poly_naive(const MultiGraph& g) {
  if (g.edge_count() == 0) return IntPoly::constant(1);
  if (!is_bridgeless(g)) return IntPoly();
  int comp_count = 0;
  component_labels(g, &comp_count);
  if (comp_count > 1) {
    IntPoly out = IntPoly::constant(1);
    for (const MultiGraph& c : components(g)) out *= flow_poly_naive(c);
    return out;
  }
  for (int i = 0; i < g.edge_count(); ++i)
    if (g.edge(i).is_loop()) return x_minus_1() * flow_poly_naive(delete_edge(g, i));
  return flow_poly_naive(contract_edge(g, 0)) - flow_poly_naive(delete_edge(g, 0));
}

Integer count_flows_oracle(const MultiGraph& g, int q, std::uint64_t max_assignments) {
  if (q < 2) throw std::invalid_argument("group order must be at least 2");
  std::vector<int> arcs;
  int loops = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (g.edge(i).is_loop()) ++loops;
    else arcs.push_back(i);
  }
  // (q-1)^arcs must stay enumerable.
  long double work = 1;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    work *= static_cast<long double>(q - 1);
    if (work > static_cast<long double>(max_assignments)) throw std::invalid_argument("instance too large for the flow oracle");
  }
  const int n = g.vertex_count();
  std::vector<int> last(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    last[g.edge(arcs[k]).u] = static_cast<int>(k);
    last[g.edge(arcs[k]).v] = static_cast<int>(k);
  }
  std::vector<int> net(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  // Iterative depth-first enumeration over arc values 1..q-1.
  std::vector<int> value(arcs.size(), 0);
  int k = 0;
  const int total = static_cast<int>(arcs.size());
  auto apply = [&](int idx, int delta) {
    const Edge& e = g.edge(arcs[static_cast<std::size_t>(idx)]);
    net[e.u] = ((net[e.u] - delta) % q + q) % q;  // tail sends out
    net[e.v] = ((net[e.v] + delta) % q + q) % q;
  };
  auto closed_ok = [&](int idx) {
    const Edge& e = g.edge(arcs[static_cast<std::size_t>(idx)]);
    if (last[e.u] == idx && net[e.u] != 0) return false;
    if (last[e.v] == idx && net[e.v] != 0) return false;
    return true;
  };
  if (total == 0) {
    count = 1;
  } else {
    while (k >= 0) {
      if (k == total) {
        ++count;
        --k;
        continue;
      }
      if (value[k] > 0) apply(k, -value[k]);
      ++value[k];
      if (value[k] >= q) {
        value[k] = 0;
        --k;
        continue;
      }
      apply(k, value[k]);
      if (closed_ok(k)) ++k;
    }
  }
  // Vertices with no arcs impose no constraint.
  Integer result(static_cast<unsigned long>(count));
  Integer loop_factor;
  mpz_ui_pow_ui(loop_factor.get_mpz_t(), static_cast<unsigned long>(q - 1), static_cast<unsigned long>(loops));
  return result * loop_factor;
}

MultiGraph build_H_s(int s) {
  if (s < 3) throw std::invalid_argument("H_s needs s >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      if (i == 0 && j == 1) {
        es.push_back({0, s});
        es.push_back({s, 1});
      } else {
        es.push_back({i, j});
      }
    }
  }
  return MultiGraph(s + 1, std::move(es));
}

}  // namespace flowroots
