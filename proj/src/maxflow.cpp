#include "kcut/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace kcut {

namespace {

struct Arc {
  int to;
  int rev;  // index of the reverse arc in adj[to]
  Rational cap;
};

struct FlowNetwork {
  std::vector<std::vector<Arc>> adj;

  explicit FlowNetwork(const WeightedMultigraph& g) : adj(g.n()) {
    // One undirected capacity per support pair (weights and copies summed).
    for (const auto& e : g.edges()) {
      Rational c = e.w * e.mult;
      bool merged = false;
      for (auto& a : adj[e.u])
        if (a.to == e.v) {
          a.cap += c;
          adj[e.v][a.rev].cap += c;
          merged = true;
          break;
        }
      if (!merged) {
        adj[e.u].push_back({e.v, static_cast<int>(adj[e.v].size()), c});
        adj[e.v].push_back({e.u, static_cast<int>(adj[e.u].size()) - 1, c});
      }
    }
  }

  // BFS for a shortest augmenting path; returns bottleneck (0 if none).
  Rational augment(int s, int t) {
    int n = static_cast<int>(adj.size());
    std::vector<int> prev_node(n, -1), prev_arc(n, -1);
    std::queue<int> bfs;
    bfs.push(s);
    prev_node[s] = s;
    while (!bfs.empty() && prev_node[t] == -1) {
      int v = bfs.front();
      bfs.pop();
      for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap <= 0 || prev_node[a.to] != -1) continue;
        prev_node[a.to] = v;
        prev_arc[a.to] = i;
        bfs.push(a.to);
      }
    }
    if (prev_node[t] == -1) return 0;
    Rational bottleneck = -1;
    for (int v = t; v != s; v = prev_node[v]) {
      const Arc& a = adj[prev_node[v]][prev_arc[v]];
      if (bottleneck < 0 || a.cap < bottleneck) bottleneck = a.cap;
    }
    for (int v = t; v != s; v = prev_node[v]) {
      Arc& a = adj[prev_node[v]][prev_arc[v]];
      a.cap -= bottleneck;
      adj[v][a.rev].cap += bottleneck;
    }
    return bottleneck;
  }

  std::vector<int> reachable(int s) const {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{s}, out;
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (const Arc& a : adj[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

MaxFlowResult max_flow_min_cut(const WeightedMultigraph& g, int s, int t) {
  if (s < 0 || s >= g.n() || t < 0 || t >= g.n())
    throw InputError("flow endpoint out of range");
  if (s == t) throw InputError("flow endpoints must differ");
  FlowNetwork net(g);
  Rational value = 0;
  while (true) {
    Rational pushed = net.augment(s, t);
    if (pushed == 0) break;
    value += pushed;
  }
  return {value, net.reachable(s)};
}

MaxFlowResult global_min_cut(const WeightedMultigraph& g) {
  if (g.n() < 2) throw InputError("global min cut needs at least two vertices");
  MaxFlowResult best;
  bool have = false;
  for (int t = 1; t < g.n(); ++t) {
    auto r = max_flow_min_cut(g, 0, t);
    if (!have || r.value < best.value) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

}  // namespace kcut
