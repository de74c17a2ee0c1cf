#pragma once

#include <vector>

#include "kcut/maxflow.hpp"
#include "kcut/partition.hpp"

namespace kcut {

/// Spanning tree whose path minima encode all pairwise min-cut values.
struct GomoryHuTree {
  struct TreeEdge {
    int u, v;
    Rational flow;
  };
  int n = 0;
  std::vector<TreeEdge> edges;  // exactly n-1

  /// Minimum flow value on the tree path between s and t.
  Rational min_on_path(int s, int t) const;
};

/// Gusfield's variant: n-1 max-flow calls, no contractions.
GomoryHuTree gomory_hu(const WeightedMultigraph& g);

/// Remove the k-1 smallest tree cuts; the tree components are the parts.
/// Minsum cost is at most twice the minsum optimum.
Partition minsum_2approx(const WeightedMultigraph& g, int k);

/// The minsum 2-approximation read under the minmax objective; its minmax
/// cost is at most 2k times the minmax optimum.
Partition minmax_2k_approx(const WeightedMultigraph& g, int k);

}  // namespace kcut
