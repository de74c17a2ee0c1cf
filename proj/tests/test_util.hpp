#pragma once

#include <vector>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"

namespace kcut::testutil {

inline WeightedMultigraph unit_graph(int n, std::vector<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [u, v] : edges) out.push_back({u, v, 1, 1});
  return WeightedMultigraph(n, std::move(out));
}

inline WeightedMultigraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return unit_graph(n, edges);
}

inline WeightedMultigraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return unit_graph(n, edges);
}

inline WeightedMultigraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return unit_graph(n, edges);
}

inline Partition make_partition(std::vector<std::vector<int>> parts) {
  Partition p;
  for (const auto& part : parts)
    p.ground.insert(p.ground.end(), part.begin(), part.end());
  p.parts = std::move(parts);
  return canonical(std::move(p));
}

}  // namespace kcut::testutil
