#pragma once

#include <cstdint>
#include <vector>

#include "kcut/partition.hpp"

namespace kcut {

/// Spanning tree of a host graph, kept as an explicit edge list. Every edge
/// is an edge of the host.
struct SpanningTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // n-1 entries, u < v

  std::vector<std::vector<int>> adjacency() const;
};

/// Greedy load-balancing packing: tree i is a minimum spanning tree of the
/// support graph under the cumulative edge loads of trees 1..i-1. Ties are
/// broken by a seeded shuffle so repeated rounds spread the load.
std::vector<SpanningTree> pack_trees(const WeightedMultigraph& g, int count,
                                     std::uint64_t seed = 1);

struct ThorupOptions {
  int tree_count = 0;  // 0: ceil(3 k^3 ln(n+1))
  int top = 1;         // how many best-scoring trees to surface
  std::uint64_t seed = 1;
};

/// Packs trees and returns the `top` trees with the smallest total final
/// load, best first. The first tree is the solver's default guide tree.
std::vector<SpanningTree> thorup_trees(const WeightedMultigraph& g, int k,
                                       const ThorupOptions& opts = {});
SpanningTree thorup_tree(const WeightedMultigraph& g, int k,
                         const ThorupOptions& opts = {});

/// Number of tree edges whose endpoints lie in different parts.
int crossing_count(const SpanningTree& t, const std::vector<std::vector<int>>& parts);
int crossing_count(const SpanningTree& t, const KSubpartition& p);
int crossing_count(const SpanningTree& t, const Partition& p);

}  // namespace kcut
