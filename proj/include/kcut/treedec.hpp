#pragma once

#include <string>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Rooted tree decomposition. Adhesions are derived from the structure:
/// the adhesion of t is the intersection of the bags inside and outside the
/// subtree rooted at t (empty at the root).
struct TreeDecomposition {
  struct Node {
    std::vector<int> bag;  // sorted
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  std::vector<int> post_order() const;

  /// Vertices in bags of the subtree rooted at t (t inclusive), sorted.
  std::vector<int> subtree_vertices(int t) const;
  std::vector<int> descendants(int t) const;  // t inclusive
  std::vector<int> adhesion(int t) const;
};

/// Single root bag holding every vertex; adhesion empty, trivially compact
/// for connected graphs.
TreeDecomposition trivial_decomposition(const WeightedMultigraph& g);

struct DecompositionReport {
  bool valid = false;
  bool compact = false;
  int max_adhesion = 0;
  std::string first_violation;  // empty when valid and compact
};

DecompositionReport verify_decomposition(const WeightedMultigraph& g,
                                         const TreeDecomposition& td);

/// True iff every nonempty proper subset S' of V with at most b crossing
/// edge copies has |s and S'| <= a or |s minus S'| <= a. Exhaustive over all
/// 2-cuts; refuses graphs beyond `cap` vertices.
bool verify_unbreakable(const WeightedMultigraph& g, const std::vector<int>& s,
                        long long a, long long b, int cap = 20);

/// Line format: `b <node-id> <v1> <v2> ...` declares a bag, `t <parent>
/// <child>` declares a tree edge; the root is the unique parentless node.
TreeDecomposition parse_tree_decomposition(const std::string& text);
std::string serialize_tree_decomposition(const TreeDecomposition& td);

}  // namespace kcut
