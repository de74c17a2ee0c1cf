#include "kcut/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace kcut {

namespace {

std::vector<std::vector<int>> components_after_removal(
    const ProjectedTree& proj, const std::vector<int>& removed_edges) {
  std::vector<char> gone(proj.edges.size(), 0);
  for (int idx : removed_edges) gone[idx] = 1;
  int maxv = proj.vertices.empty() ? 0 : proj.vertices.back() + 1;
  std::vector<std::vector<int>> adj(maxv);
  for (std::size_t i = 0; i < proj.edges.size(); ++i) {
    if (gone[i]) continue;
    adj[proj.edges[i].u].push_back(proj.edges[i].v);
    adj[proj.edges[i].v].push_back(proj.edges[i].u);
  }
  std::vector<char> seen(maxv, 0);
  std::vector<std::vector<int>> comps;
  for (int s : proj.vertices) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<int> comp, stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return comps;
}

}  // namespace

std::vector<Partition> enumerate_adhesion_partitions(const SpanningTree& tree,
                                                     const std::vector<int>& adhesion,
                                                     int k) {
  if (k < 1) throw InputError("k must be at least 1");
  if (adhesion.empty()) return {Partition{}};
  auto proj = project_tree(tree, adhesion);
  int budget = 2 * k * k;
  int ne = static_cast<int>(proj.edges.size());

  // Rough cost estimate before committing to the enumeration.
  {
    double total = 0, binom = 1;
    for (int j = 0; j <= std::min(ne, budget); ++j) {
      total += binom * std::pow(static_cast<double>(k),
                                std::min<double>(j + 1, adhesion.size()));
      binom = binom * (ne - j) / (j + 1);
      if (total > 5e7)
        throw InputError("adhesion partition enumeration too large");
    }
  }

  std::vector<char> in_adhesion(tree.n, 0);
  for (int v : adhesion) in_adhesion[v] = 1;
  std::set<std::vector<std::vector<int>>> seen;

  std::vector<int> removed;
  std::function<void(int)> enumerate = [&](int next) {
    // Bin only components that meet the adhesion; the rest can always be
    // absorbed into an existing bin without changing the restriction.
    auto comps = components_after_removal(proj, removed);
    std::vector<std::vector<int>> relevant;
    for (auto& comp : comps) {
      std::vector<int> hit;
      for (int v : comp)
        if (in_adhesion[v]) hit.push_back(v);
      if (!hit.empty()) relevant.push_back(std::move(hit));
    }
    int c = static_cast<int>(relevant.size());
    std::vector<int> bin(c, 0);
    while (true) {
      std::vector<std::vector<int>> parts(k);
      for (int i = 0; i < c; ++i)
        parts[bin[i]].insert(parts[bin[i]].end(), relevant[i].begin(),
                             relevant[i].end());
      Partition p;
      p.ground = adhesion;
      for (auto& part : parts)
        if (!part.empty()) p.parts.push_back(std::move(part));
      p = canonical(std::move(p));
      seen.insert(p.parts);
      int pos = c - 1;
      while (pos >= 0 && bin[pos] == k - 1) bin[pos--] = 0;
      if (pos < 0) break;
      ++bin[pos];
    }
    if (static_cast<int>(removed.size()) == budget) return;
    for (int e = next; e < ne; ++e) {
      removed.push_back(e);
      enumerate(e + 1);
      removed.pop_back();
    }
  };
  enumerate(0);

  std::vector<Partition> out;
  std::vector<int> ground = adhesion;
  std::sort(ground.begin(), ground.end());
  for (const auto& parts : seen) out.push_back(Partition{ground, parts});
  return out;
}

Partition NiceDecomposition::coarse(const std::vector<int>& bag) const {
  Partition p;
  p.ground = bag;
  p.parts = parts;
  if (!core.empty()) p.parts.push_back(core);
  return canonical(std::move(p));
}

namespace {

struct ShareContext {
  const WeightedMultigraph& g;
  std::vector<std::vector<int>> adhesions;  // of every descendant, t inclusive
  std::vector<char> in_subtree;             // of V(G_t)

  ShareContext(const WeightedMultigraph& graph, const TreeDecomposition& td, int t)
      : g(graph), in_subtree(graph.n(), 0) {
    for (int d : td.descendants(t)) adhesions.push_back(td.adhesion(d));
    for (int v : td.subtree_vertices(t)) in_subtree[v] = 1;
  }

  bool shares(const std::vector<int>& p1, const std::vector<int>& p2) const {
    std::vector<char> a(g.n(), 0), b(g.n(), 0);
    for (int v : p1) a[v] = 1;
    for (int v : p2) b[v] = 1;
    for (const auto& adhesion : adhesions) {
      bool hit_a = false, hit_b = false;
      for (int v : adhesion) {
        hit_a = hit_a || a[v];
        hit_b = hit_b || b[v];
      }
      if (hit_a && hit_b) return true;
    }
    for (const auto& e : g.edges()) {
      if (!in_subtree[e.u] || !in_subtree[e.v]) continue;
      if ((a[e.u] && b[e.v]) || (a[e.v] && b[e.u])) return true;
    }
    return false;
  }
};

}  // namespace

bool shares_adhesion(const std::vector<int>& p1, const std::vector<int>& p2,
                     const TreeDecomposition& td, int t) {
  std::set<int> s1(p1.begin(), p1.end());
  for (int d : td.descendants(t)) {
    bool hit1 = false, hit2 = false;
    for (int v : td.adhesion(d)) {
      if (s1.count(v)) hit1 = true;
      if (std::find(p2.begin(), p2.end(), v) != p2.end()) hit2 = true;
    }
    if (hit1 && hit2) return true;
  }
  return false;
}

bool shares_edge(const std::vector<int>& p1, const std::vector<int>& p2,
                 const WeightedMultigraph& g, const TreeDecomposition& td, int t) {
  std::vector<char> a(g.n(), 0), b(g.n(), 0), in_sub(g.n(), 0);
  for (int v : p1) a[v] = 1;
  for (int v : p2) b[v] = 1;
  for (int v : td.subtree_vertices(t)) in_sub[v] = 1;
  for (const auto& e : g.edges()) {
    if (!in_sub[e.u] || !in_sub[e.v]) continue;
    if ((a[e.u] && b[e.v]) || (a[e.v] && b[e.u])) return true;
  }
  return false;
}

bool verify_nice(const WeightedMultigraph& g, const TreeDecomposition& td, int t,
                 const NiceDecomposition& d, int k) {
  const auto& bag = td.nodes[t].bag;
  Partition coarse = d.coarse(bag);
  try {
    validate_partition(coarse);
    Partition fine = d.fine;
    validate_partition(fine);
    if (!refines(fine, coarse)) return false;
  } catch (const InputError&) {
    return false;
  }
  std::vector<int> core_sorted = d.core;
  std::sort(core_sorted.begin(), core_sorted.end());
  if (core_sorted.empty()) {
    if (coarse.parts.size() != 1) return false;
  } else {
    bool core_in_fine = false;
    for (const auto& part : d.fine.parts)
      if (part == core_sorted) core_in_fine = true;
    if (!core_in_fine) return false;
  }
  // Each coarse part holds at most 4k^2+1 fine parts.
  int cap = 4 * k * k + 1;
  auto coarse_label = part_labels(coarse.parts, g.n());
  for (std::size_t i = 0; i < coarse.parts.size(); ++i) {
    int count = 0;
    for (const auto& part : d.fine.parts)
      if (coarse_label[part.front()] == static_cast<int>(i)) ++count;
    if (count > cap) return false;
  }
  // No edges between two distinct non-core coarse parts.
  std::vector<int> noncore_label(g.n(), -1);
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (int v : d.parts[i]) noncore_label[v] = static_cast<int>(i);
  for (const auto& e : g.edges()) {
    int lu = noncore_label[e.u], lv = noncore_label[e.v];
    if (lu != -1 && lv != -1 && lu != lv) return false;
  }
  // Each child adhesion (and the node's own) meets at most one non-core part.
  std::vector<int> check_nodes = td.nodes[t].children;
  check_nodes.push_back(t);
  for (int node : check_nodes) {
    std::set<int> touched;
    for (int v : td.adhesion(node))
      if (noncore_label[v] != -1) touched.insert(noncore_label[v]);
    if (touched.size() > 1) return false;
  }
  return true;
}

NiceDecomposition nice_from_selection(const WeightedMultigraph& g,
                                      const TreeDecomposition& td, int t,
                                      const std::vector<std::vector<int>>& r_parts,
                                      const std::vector<int>& selected, int k) {
  ShareContext ctx(g, td, t);
  int cap = 4 * k * k + 1;
  std::vector<char> is_selected(r_parts.size(), 0);
  for (int idx : selected) {
    if (idx < 0 || idx >= static_cast<int>(r_parts.size()))
      throw InputError("selected part index out of range");
    is_selected[idx] = 1;
  }

  // Merge everything outside the selection into one core part.
  std::vector<std::vector<int>> q1;
  int o1 = -1;
  {
    std::vector<int> merged;
    for (std::size_t i = 0; i < r_parts.size(); ++i)
      if (!is_selected[i])
        merged.insert(merged.end(), r_parts[i].begin(), r_parts[i].end());
    if (!merged.empty()) {
      std::sort(merged.begin(), merged.end());
      o1 = 0;
      q1.push_back(std::move(merged));
    }
    for (std::size_t i = 0; i < r_parts.size(); ++i)
      if (is_selected[i]) q1.push_back(r_parts[i]);
  }

  auto interaction_components = [&](const std::vector<std::vector<int>>& parts,
                                    int skip) {
    int m = static_cast<int>(parts.size());
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        if (i == skip || j == skip) continue;
        if (ctx.shares(parts[i], parts[j])) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
      }
    std::vector<int> comp(m, -1);
    int comps = 0;
    for (int s = 0; s < m; ++s) {
      if (s == skip || comp[s] != -1) continue;
      std::vector<int> stack{s};
      comp[s] = comps;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
          if (comp[u] == -1) {
            comp[u] = comps;
            stack.push_back(u);
          }
      }
      ++comps;
    }
    std::vector<std::vector<int>> groups(comps);
    for (int i = 0; i < m; ++i)
      if (i != skip) groups[comp[i]].push_back(i);
    groups.erase(std::remove_if(groups.begin(), groups.end(),
                                [](const std::vector<int>& v) { return v.empty(); }),
                 groups.end());
    return groups;
  };

  // Oversized interaction components are absorbed into the core.
  std::vector<std::vector<int>> q2;
  int o2 = -1;
  {
    auto groups = interaction_components(q1, o1);
    std::vector<char> absorb(q1.size(), 0);
    for (const auto& group : groups)
      if (static_cast<int>(group.size()) > cap)
        for (int idx : group) absorb[idx] = 1;
    std::vector<int> core;
    if (o1 != -1) core = q1[o1];
    for (std::size_t i = 0; i < q1.size(); ++i)
      if (absorb[i]) core.insert(core.end(), q1[i].begin(), q1[i].end());
    if (!core.empty()) {
      std::sort(core.begin(), core.end());
      o2 = 0;
      q2.push_back(std::move(core));
    }
    for (std::size_t i = 0; i < q1.size(); ++i)
      if (!absorb[i] && static_cast<int>(i) != o1) q2.push_back(q1[i]);
  }

  // Remaining components merge into single coarse parts.
  std::vector<std::vector<int>> q3;
  {
    auto groups = interaction_components(q2, o2);
    if (o2 != -1) q3.push_back(q2[o2]);
    for (const auto& group : groups) {
      std::vector<int> merged;
      for (int idx : group)
        merged.insert(merged.end(), q2[idx].begin(), q2[idx].end());
      std::sort(merged.begin(), merged.end());
      q3.push_back(std::move(merged));
    }
  }

  const auto& bag = td.nodes[t].bag;
  std::vector<char> in_bag(g.n(), 0);
  for (int v : bag) in_bag[v] = 1;
  auto restrict_parts = [&](const std::vector<std::vector<int>>& parts) {
    std::vector<std::vector<int>> out;
    for (const auto& part : parts) {
      std::vector<int> kept;
      for (int v : part)
        if (in_bag[v]) kept.push_back(v);
      if (!kept.empty()) {
        std::sort(kept.begin(), kept.end());
        out.push_back(std::move(kept));
      }
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });
    return out;
  };

  NiceDecomposition d;
  if (o2 != -1) {
    for (int v : q2[o2])
      if (in_bag[v]) d.core.push_back(v);
    std::sort(d.core.begin(), d.core.end());
  }
  auto p_parts = restrict_parts(q3);
  for (auto& part : p_parts)
    if (part != d.core) d.parts.push_back(std::move(part));
  d.fine.ground = bag;
  std::sort(d.fine.ground.begin(), d.fine.ground.end());
  d.fine.parts = restrict_parts(q2);
  return d;
}

std::vector<NiceDecomposition> generate_nice_decompositions(
    const WeightedMultigraph& g, const SpanningTree& tree,
    const TreeDecomposition& td, int t, int k, long long lambda,
    const NiceDecompOptions& opts) {
  const auto& bag = td.nodes[t].bag;
  if (bag.empty()) throw InputError("cannot decompose an empty bag");
  auto proj = project_tree(tree, bag);
  int ne = static_cast<int>(proj.edges.size());
  int cap = 4 * k * k + 1;

  BigInt lk1 = BigInt(lambda) * k + 1;
  BigInt lk1_5 = lk1 * lk1 * lk1 * lk1 * lk1;
  bool small_bag = BigInt(bag.size()) <= lk1_5;

  auto clamp_to = [&](const BigInt& value, int limit) {
    return value >= limit ? limit : value.convert_to<int>();
  };
  int s1 = std::min(ne, 4 * k * k);
  int s2 = clamp_to(BigInt(cap) * 2 * (lk1_5 + cap), ne);
  auto edge_family = build_separating_family(ne, s1, s2, opts.seed, opts.family);

  std::set<std::vector<std::vector<int>>> seen;
  std::vector<NiceDecomposition> out;
  auto emit = [&](NiceDecomposition d) {
    // -1 entries separate the three sections of the dedup key.
    std::vector<std::vector<int>> key = d.fine.parts;
    key.push_back({-1});
    key.push_back(d.core);
    key.push_back({-1});
    for (const auto& part : d.parts) key.push_back(part);
    if (seen.insert(key).second && out.size() < opts.max_outputs)
      out.push_back(std::move(d));
  };

  for (const auto& removed : edge_family.members) {
    auto comps = components_after_removal(proj, removed);
    if (small_bag) {
      if (static_cast<int>(comps.size()) > cap) continue;
      NiceDecomposition d;
      d.parts.push_back(bag);
      d.fine.ground = bag;
      d.fine.parts = restrict_to(comps, bag).parts;
      emit(std::move(d));
    } else {
      int nr = static_cast<int>(comps.size());
      BigInt lk = BigInt(lambda) * k;
      int ss2 = clamp_to(BigInt(cap) * (lk * lk + 2 * lk + cap), nr);
      auto part_family = build_separating_family(nr, std::min(nr, cap), ss2,
                                                 opts.seed + 1 + removed.size(),
                                                 opts.family);
      for (const auto& selected : part_family.members)
        emit(nice_from_selection(g, td, t, comps, selected, k));
    }
    if (out.size() >= opts.max_outputs) break;
  }
  return out;
}

}  // namespace kcut
