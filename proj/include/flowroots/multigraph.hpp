#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowroots {

/// Undirected edge between two vertex ids; `u == v` encodes a loop.
struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite multigraph on vertices 0..n-1. Loops and parallel edges are
/// allowed and the edge order given at construction is preserved, so an
/// edge index keeps referring to the same listed edge.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  /// Degree with loops counted twice.
  int degree(int v) const;
  std::vector<int> degrees() const;
  int loop_count() const;
  bool has_loop() const { return loop_count() > 0; }

  /// Incident edge indices per vertex; a loop is listed twice at its vertex.
  std::vector<std::vector<int>> incidence() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Named small graphs used throughout the tests and audits.
MultiGraph make_loop_graph();                   // L
MultiGraph make_bond(int k);                    // Z_k
MultiGraph make_cycle(int n);                   // C_n
MultiGraph make_complete(int n);                // K_n
MultiGraph make_path(int n);
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

MultiGraph delete_edge(const MultiGraph& g, int i);
MultiGraph delete_edges(const MultiGraph& g, std::span<const int> indices);

/// Merges the endpoints of edge i. Other parallels between them become
/// loops; nothing is simplified.
MultiGraph contract_edge(const MultiGraph& g, int i);

/// Sub-multigraph induced by a vertex subset, re-indexed in increasing order
/// of the original ids.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const int> vertices);

/// Contracts every vertex in `side` (which must be non-empty) into a single
/// new vertex; edges with both ends in `side` disappear.
MultiGraph contract_vertex_set(const MultiGraph& g, const std::vector<bool>& side);

/// Underlying simple graph: loops dropped, parallel classes collapsed.
MultiGraph simplify(const MultiGraph& g);

// ---- connectivity ---------------------------------------------------------

/// Component id per vertex (ids are dense, in order of first vertex).
std::vector<int> component_labels(const MultiGraph& g, int* count = nullptr);
int component_count(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

/// Splits into connected components, each re-indexed.
std::vector<MultiGraph> components(const MultiGraph& g);

struct Block {
  MultiGraph graph;
  std::vector<int> vertex_map;  // block vertex -> original vertex
  std::vector<int> edge_map;    // block edge -> original edge index
};

/// Maximal non-separable subgraphs. Every loop is its own block and an
/// isolated vertex forms an edgeless block; the block edge sets partition E.
std::vector<Block> blocks(const MultiGraph& g);
int block_count(const MultiGraph& g);

std::vector<int> bridges(const MultiGraph& g);
bool is_bridgeless(const MultiGraph& g);
std::vector<int> cut_vertices(const MultiGraph& g);

bool is_nonseparable(const MultiGraph& g);
bool is_3_edge_connected(const MultiGraph& g);

/// Index of an edge lying in some 2-edge-cut, or -1 if there is none.
/// Expects a connected bridgeless graph.
int find_two_cut_edge(const MultiGraph& g);

// ---- edge cuts --------------------------------------------------------------

struct EdgeCut {
  std::vector<int> edge_indices;  // sorted
  std::vector<bool> side;         // side[v] true for vertices in V1
  bool proper = false;
};

/// Every distinct edge subset of the given size that is the crossing set of
/// some vertex bipartition. Expects a connected graph.
std::vector<EdgeCut> edge_cuts(const MultiGraph& g, int size);

/// First 3-edge-cut whose removal leaves no isolated vertex, if any.
bool find_proper_three_cut(const MultiGraph& g, EdgeCut* out = nullptr);

// ---- canonical form -------------------------------------------------------

/// Isomorphism-invariant byte string: equal for isomorphic multigraphs and
/// different otherwise. Cost grows factorially with symmetric vertex
/// classes, so keep n small.
std::string canonical_code(const MultiGraph& g);

/// Rebuilds a graph from its canonical code (vertices in canonical order).
MultiGraph graph_from_code(const std::string& code);

/// Relabels vertices: vertex v becomes perm[v]. Edge order is unchanged.
MultiGraph relabel(const MultiGraph& g, std::span<const int> perm);

// ---- plane duals and chordality --------------------------------------------

struct FaceStructure {
  std::vector<std::vector<int>> faces;  // edge indices, one entry per incidence
};

/// One dual vertex per face, one dual edge per primal edge (same index).
MultiGraph build_dual(const MultiGraph& g, const FaceStructure& faces);

/// Faces of the dual graph: the star of each primal vertex.
FaceStructure dual_faces(const MultiGraph& g);

void validate_faces(const MultiGraph& g, const FaceStructure& faces);

bool is_chordal(const MultiGraph& g);

}  // namespace flowroots
