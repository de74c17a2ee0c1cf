#include "kcut/projection.hpp"

#include <algorithm>

namespace kcut {

ProjectedTree project_tree(const SpanningTree& t, const std::vector<int>& x) {
  if (x.empty()) throw InputError("projection target set is empty");
  std::vector<char> in_x(t.n, 0);
  for (int v : x) {
    if (v < 0 || v >= t.n) throw InputError("vertex id out of range");
    in_x[v] = 1;
  }
  auto adj = t.adjacency();
  std::vector<int> deg(t.n);
  std::vector<char> alive(t.n, 1);
  for (int v = 0; v < t.n; ++v) deg[v] = static_cast<int>(adj[v].size());

  // Prune leaves outside X until none remain.
  std::vector<int> queue;
  for (int v = 0; v < t.n; ++v)
    if (!in_x[v] && deg[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (int u : adj[v])
      if (alive[u]) {
        --deg[u];
        if (!in_x[u] && deg[u] == 1) queue.push_back(u);
      }
  }

  ProjectedTree pt;
  std::vector<char> keep(t.n, 0);
  for (int v = 0; v < t.n; ++v)
    if (alive[v] && (in_x[v] || deg[v] >= 3)) {
      keep[v] = 1;
      pt.vertices.push_back(v);
    }

  // Walk from each kept vertex through degree-2 chains of dropped vertices;
  // a path is recorded from its smaller kept endpoint.
  for (int u : pt.vertices) {
    for (int w : adj[u]) {
      if (!alive[w]) continue;
      std::vector<std::pair<int, int>> path{{u, w}};
      int prev = u, cur = w;
      while (!keep[cur]) {
        int next = -1;
        for (int z : adj[cur])
          if (alive[z] && z != prev) {
            next = z;
            break;
          }
        path.push_back({cur, next});
        prev = cur;
        cur = next;
      }
      if (u < cur) pt.edges.push_back({u, cur, std::move(path)});
    }
  }
  std::sort(pt.edges.begin(), pt.edges.end(),
            [](const ProjectedTree::PEdge& a, const ProjectedTree::PEdge& b) {
              return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
            });
  return pt;
}

int projected_crossings(const ProjectedTree& pt, const Partition& p_proj) {
  int maxv = pt.vertices.empty() ? 0 : pt.vertices.back() + 1;
  auto label = part_labels(p_proj.parts, maxv);
  int crossings = 0;
  for (const auto& e : pt.edges)
    if (label[e.u] != label[e.v]) ++crossings;
  return crossings;
}

Partition lift_partition(const SpanningTree& t, const std::vector<int>& x,
                         const Partition& p_proj) {
  auto pt = project_tree(t, x);
  {
    std::vector<int> ground = p_proj.ground;
    std::sort(ground.begin(), ground.end());
    if (ground != pt.vertices)
      throw InputError("lift: partition does not cover the projected vertices");
  }
  auto label = part_labels(p_proj.parts, t.n);

  // Cut the first host edge of each crossing projected edge.
  std::vector<std::pair<int, int>> cut;
  for (const auto& e : pt.edges)
    if (label[e.u] != label[e.v]) cut.push_back(e.path.front());
  auto is_cut = [&](int a, int b) {
    return std::find(cut.begin(), cut.end(), std::make_pair(a, b)) != cut.end() ||
           std::find(cut.begin(), cut.end(), std::make_pair(b, a)) != cut.end();
  };

  auto adj = t.adjacency();
  std::vector<int> comp_part(t.n, -1);
  for (int s = 0; s < t.n; ++s) {
    if (comp_part[s] != -1) continue;
    std::vector<int> members{s}, stack{s};
    std::vector<char> seen(t.n, 0);
    seen[s] = 1;
    int part = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (label[v] != -1) part = label[v];
      for (int u : adj[v]) {
        if (seen[u] || is_cut(v, u)) continue;
        seen[u] = 1;
        members.push_back(u);
        stack.push_back(u);
      }
    }
    // Every component contains a projected vertex: pruned branches and
    // contracted interiors never lose their attachment edge.
    if (part == -1) throw std::logic_error("lift: component without projected vertex");
    for (int v : members) comp_part[v] = part;
  }

  Partition out;
  out.parts.assign(p_proj.parts.size(), {});
  for (int v = 0; v < t.n; ++v) {
    out.parts[comp_part[v]].push_back(v);
    out.ground.push_back(v);
  }
  out.parts.erase(std::remove_if(out.parts.begin(), out.parts.end(),
                                 [](const std::vector<int>& p) { return p.empty(); }),
                  out.parts.end());
  return canonical(std::move(out));
}

}  // namespace kcut
