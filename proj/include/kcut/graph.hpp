#pragma once

#include <string>
#include <vector>

#include "kcut/rational.hpp"

namespace kcut {

/// One class of parallel edges: `mult` copies of an edge {u,v} of weight `w`.
struct Edge {
  int u = 0;
  int v = 0;
  Rational w = 1;
  long long mult = 1;

  bool operator==(const Edge& o) const = default;
};

/// Undirected multigraph with non-negative rational edge weights.
/// Vertices are 0..n-1, self-loops are rejected, parallel edges are kept
/// as a multiplicity count. Immutable after construction.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  WeightedMultigraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Number of edge copies (parallel edges counted with multiplicity).
  long long edge_count() const;
  /// Number of distinct endpoint pairs.
  int support_size() const { return static_cast<int>(edges_.size()); }

  bool is_unit() const;       // every copy has weight 1
  bool all_integer() const;   // every weight is an integer
  Rational total_weight() const;
  Rational max_edge_weight() const;

  /// Total weight of edges with exactly one endpoint in `s`.
  Rational cut_weight(const std::vector<int>& s) const;

  /// Support-level adjacency (one entry per distinct neighbor).
  std::vector<std::vector<int>> support_adjacency() const;

  std::vector<std::vector<int>> components() const;
  bool is_connected() const;

  /// Induced subgraph on `vertices` (sorted ascending); vertex i of the
  /// result corresponds to vertices[i].
  WeightedMultigraph induced(const std::vector<int>& vertices) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // canonical: u < v, sorted, merged
};

WeightedMultigraph parse_graph(const std::string& text);
std::string serialize_graph(const WeightedMultigraph& g);

}  // namespace kcut
