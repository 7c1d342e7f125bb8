#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowroots/multigraph.hpp"
#include "flowroots/polyalg.hpp"

namespace flowroots {

enum class Rule {
  empty,
  bridge_zero,
  component_split,
  block_split,
  loop_factor,
  two_cut_contract,
  three_cut_split,
  vertex_edge_split,
  delete_contract,
  memo_hit,
};

const char* rule_name(Rule r);

/// One reduction step. Children are indices into ReductionTrace::nodes and
/// appear in the order the rule combines them (for delete_contract: G/e
/// first, then G-e).
struct TraceNode {
  Rule rule = Rule::empty;
  int depth = 0;
  int vertices = 0;
  int edges = 0;
  std::vector<int> children;
  IntPoly value;
};

struct ReductionTrace {
  std::vector<TraceNode> nodes;
  int root = -1;

  /// Line-oriented dump: one indented line per step.
  std::string to_text() const;
};

/// Recomputes the root polynomial from the rules and the memo-hit leaves
/// alone. Throws std::logic_error if some node disagrees with its children.
IntPoly replay(const ReductionTrace& trace);

struct FlowStats {
  std::uint64_t calls = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t delete_contract = 0;
  std::uint64_t lemma_splits = 0;
};

/// Flow-polynomial evaluator with a memo table keyed on canonical codes.
/// An engine is not thread-safe; give each worker its own.
class FlowEngine {
 public:
  struct Options {
    bool use_memo = true;
    int memo_vertex_limit = 14;
  };

  FlowEngine() = default;
  explicit FlowEngine(Options opts) : opts_(opts) {}

  IntPoly flow_poly(const MultiGraph& g, ReductionTrace* trace = nullptr);

  void clear_cache() { memo_.clear(); }
  std::size_t cache_size() const { return memo_.size(); }
  const FlowStats& stats() const { return stats_; }

 private:
  IntPoly eval(const MultiGraph& g, int depth, ReductionTrace* trace, int* node);
  IntPoly eval_block(const MultiGraph& g, int depth, ReductionTrace* trace, int* node);

  Options opts_;
  std::unordered_map<std::string, IntPoly> memo_;
  FlowStats stats_;
};

/// Flow polynomial with a fresh engine.
IntPoly flow_poly(const MultiGraph& g, ReductionTrace* trace = nullptr);

/// The five-branch recursion alone: no lemma shortcuts and no memo.
IntPoly flow_poly_naive(const MultiGraph& g);

/// Nowhere-zero Z_q flows counted by exhaustive assignment, orienting each
/// edge from its first to its second endpoint.
Integer count_flows_oracle(const MultiGraph& g, int q,
                           std::uint64_t max_assignments = 100'000'000ULL);

/// Chromatic polynomial; zero when the graph has a loop.
IntPoly chromatic_poly(const MultiGraph& g);

/// K_s with the edge {0, 1} subdivided by the new vertex s.
MultiGraph build_H_s(int s);

}  // namespace flowroots
