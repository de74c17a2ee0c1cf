#pragma once

#include <vector>

#include "kcut/spanning.hpp"

namespace kcut {

/// Tree obtained from a spanning tree by pruning leaves outside X and
/// contracting degree-2 paths through vertices outside X. Each edge keeps
/// the host tree path it represents so cuts can be pushed back and forth.
struct ProjectedTree {
  struct PEdge {
    int u, v;
    std::vector<std::pair<int, int>> path;  // host tree edges from u to v
  };
  std::vector<int> vertices;  // host vertex ids, sorted
  std::vector<PEdge> edges;
};

/// Fixpoint of leaf pruning and path contraction. `x` must be a nonempty
/// subset of the tree's vertices.
ProjectedTree project_tree(const SpanningTree& t, const std::vector<int>& x);

/// Given a partition of the projected vertices, produces a partition of all
/// tree vertices whose tree-crossing count is at most the projected crossing
/// count and whose restriction to x agrees with p_proj restricted to x.
/// When a contracted path must be cut, the first edge in path order is cut.
Partition lift_partition(const SpanningTree& t, const std::vector<int>& x,
                         const Partition& p_proj);

/// Crossing count of a partition of the projected vertices.
int projected_crossings(const ProjectedTree& pt, const Partition& p_proj);

}  // namespace kcut
