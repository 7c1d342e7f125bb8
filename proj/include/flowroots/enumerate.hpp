#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowroots/multigraph.hpp"

namespace flowroots {

struct EnumerationBounds {
  int max_vertices = 4;
  int max_edges = 6;
  int max_multiplicity = 3;  // also caps loops at one vertex
  bool loops = true;
};

class WorkCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rough cost of enumerating up to the bounds: for each vertex count, the
/// number of labelled multigraphs respecting the caps, divided by n! and
/// multiplied by the number of one-edge extensions tried per class.
double estimate_work(const EnumerationBounds& b);

/// Enumerates connected multigraphs (the single vertex included), one class
/// per isomorphism type. `visit` is called once per edge count m = 0, 1, ...
/// with the canonical codes of that level, sorted. Level m + 1 is grown
/// from level m by adding an edge or a pendant vertex.
void enumerate_connected(const EnumerationBounds& b,
                         const std::function<void(int m, const std::vector<std::string>& codes)>& visit,
                         int workers = 1);

/// All classes as graphs, ordered by edge count then canonical code.
std::vector<MultiGraph> enumerate_connected_list(const EnumerationBounds& b, int workers = 1);

}  // namespace flowroots
