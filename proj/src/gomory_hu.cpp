#include "kcut/gomory_hu.hpp"

#include <algorithm>
#include <numeric>

namespace kcut {

Rational GomoryHuTree::min_on_path(int s, int t) const {
  if (s == t) throw InputError("path endpoints must differ");
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge idx)
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].u].push_back({edges[i].v, i});
    adj[edges[i].v].push_back({edges[i].u, i});
  }
  std::vector<int> prev(n, -1), prev_edge(n, -1);
  std::vector<int> stack{s};
  prev[s] = s;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, idx] : adj[v])
      if (prev[u] == -1) {
        prev[u] = v;
        prev_edge[u] = idx;
        stack.push_back(u);
      }
  }
  if (prev[t] == -1) throw InputError("tree is not connected");
  Rational best = -1;
  for (int v = t; v != s; v = prev[v]) {
    const Rational& f = edges[prev_edge[v]].flow;
    if (best < 0 || f < best) best = f;
  }
  return best;
}

GomoryHuTree gomory_hu(const WeightedMultigraph& g) {
  if (!g.is_connected()) throw InputError("Gomory-Hu tree needs a connected graph");
  int n = g.n();
  GomoryHuTree tree;
  tree.n = n;
  if (n <= 1) return tree;
  std::vector<int> parent(n, 0);
  std::vector<Rational> flow(n, 0);
  for (int i = 1; i < n; ++i) {
    auto r = max_flow_min_cut(g, i, parent[i]);
    flow[i] = r.value;
    std::vector<char> side(n, 0);
    for (int v : r.source_side) side[v] = 1;
    for (int j = i + 1; j < n; ++j)
      if (parent[j] == parent[i] && side[j]) parent[j] = i;
  }
  for (int i = 1; i < n; ++i) tree.edges.push_back({i, parent[i], flow[i]});
  return tree;
}

namespace {

Partition tree_components_after_removal(const GomoryHuTree& tree,
                                        const std::vector<int>& removed) {
  std::vector<char> gone(tree.edges.size(), 0);
  for (int idx : removed) gone[idx] = 1;
  std::vector<std::vector<int>> adj(tree.n);
  for (int i = 0; i < static_cast<int>(tree.edges.size()); ++i) {
    if (gone[i]) continue;
    adj[tree.edges[i].u].push_back(tree.edges[i].v);
    adj[tree.edges[i].v].push_back(tree.edges[i].u);
  }
  Partition p;
  std::vector<int> comp(tree.n, -1);
  for (int s = 0; s < tree.n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> part, stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (int u : adj[v])
        if (comp[u] == -1) {
          comp[u] = s;
          stack.push_back(u);
        }
    }
    std::sort(part.begin(), part.end());
    p.parts.push_back(std::move(part));
    }
  p.ground.resize(tree.n);
  std::iota(p.ground.begin(), p.ground.end(), 0);
  return canonical(std::move(p));
}

}  // namespace

Partition minsum_2approx(const WeightedMultigraph& g, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  if (k > g.n()) throw InputError("infeasible: k exceeds the vertex count");
  if (!g.is_connected()) throw InputError("minsum_2approx needs a connected graph");
  auto tree = gomory_hu(g);
  std::vector<int> order(tree.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ea = tree.edges[a];
    const auto& eb = tree.edges[b];
    if (ea.flow != eb.flow) return ea.flow < eb.flow;
    if (ea.u != eb.u) return ea.u < eb.u;
    return ea.v < eb.v;
  });
  order.resize(k - 1);
  return tree_components_after_removal(tree, order);
}

Partition minmax_2k_approx(const WeightedMultigraph& g, int k) {
  return minsum_2approx(g, k);
}

}  // namespace kcut
