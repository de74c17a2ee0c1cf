#include "kcut/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace kcut {

std::vector<std::vector<int>> SpanningTree::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<SpanningTree> pack_trees(const WeightedMultigraph& g, int count,
                                     std::uint64_t seed) {
  if (!g.is_connected()) throw InputError("tree packing needs a connected graph");
  if (count < 1) throw InputError("tree count must be positive");
  std::vector<std::pair<int, int>> support;
  for (const auto& e : g.edges())
    if (support.empty() || support.back() != std::make_pair(e.u, e.v))
      support.push_back({e.u, e.v});
  int m = static_cast<int>(support.size());
  std::vector<long long> load(m, 0);
  std::vector<int> order(m);
  std::vector<SpanningTree> trees;
  trees.reserve(count);
  std::mt19937_64 rng(seed);
  for (int round = 0; round < count; ++round) {
    std::iota(order.begin(), order.end(), 0);
    for (int i = m - 1; i > 0; --i)
      std::swap(order[i], order[rng() % (i + 1)]);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return load[a] < load[b]; });
    UnionFind uf(g.n());
    SpanningTree t;
    t.n = g.n();
    for (int idx : order) {
      auto [u, v] = support[idx];
      if (uf.unite(u, v)) {
        t.edges.push_back({u, v});
        ++load[idx];
      }
    }
    std::sort(t.edges.begin(), t.edges.end());
    trees.push_back(std::move(t));
  }
  return trees;
}

std::vector<SpanningTree> thorup_trees(const WeightedMultigraph& g, int k,
                                       const ThorupOptions& opts) {
  if (k < 1) throw InputError("k must be at least 1");
  int count = opts.tree_count;
  if (count <= 0)
    count = static_cast<int>(
        std::ceil(3.0 * k * k * k * std::log(static_cast<double>(g.n()) + 1.0)));
  count = std::max(count, 1);
  auto trees = pack_trees(g, count, opts.seed);

  // Final per-edge loads; a tree's score is the total load of its edges.
  std::vector<std::pair<int, int>> support;
  for (const auto& e : g.edges())
    if (support.empty() || support.back() != std::make_pair(e.u, e.v))
      support.push_back({e.u, e.v});
  std::vector<long long> load(support.size(), 0);
  auto edge_index = [&](std::pair<int, int> uv) {
    return static_cast<int>(
        std::lower_bound(support.begin(), support.end(), uv) - support.begin());
  };
  for (const auto& t : trees)
    for (auto uv : t.edges) ++load[edge_index(uv)];

  std::vector<long long> score(trees.size(), 0);
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (auto uv : trees[i].edges) score[i] += load[edge_index(uv)];

  std::vector<int> order(trees.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score[a] < score[b]; });

  std::vector<SpanningTree> best;
  for (int idx : order) {
    if (static_cast<int>(best.size()) >= std::max(opts.top, 1)) break;
    if (std::find_if(best.begin(), best.end(), [&](const SpanningTree& t) {
          return t.edges == trees[idx].edges;
        }) != best.end())
      continue;
    best.push_back(trees[idx]);
  }
  return best;
}

SpanningTree thorup_tree(const WeightedMultigraph& g, int k,
                         const ThorupOptions& opts) {
  return thorup_trees(g, k, opts).front();
}

int crossing_count(const SpanningTree& t, const std::vector<std::vector<int>>& parts) {
  auto label = part_labels(parts, t.n);
  int crossings = 0;
  for (auto [u, v] : t.edges)
    if (label[u] != -1 && label[v] != -1 && label[u] != label[v]) ++crossings;
  return crossings;
}

int crossing_count(const SpanningTree& t, const KSubpartition& p) {
  return crossing_count(t, p.parts);
}

int crossing_count(const SpanningTree& t, const Partition& p) {
  return crossing_count(t, p.parts);
}

}  // namespace kcut
