#include "kcut/treedec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kcut {

std::vector<int> TreeDecomposition::post_order() const {
  std::vector<int> order;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(t);
      continue;
    }
    stack.push_back({t, true});
    for (int c : nodes[t].children) stack.push_back({c, false});
  }
  return order;
}

std::vector<int> TreeDecomposition::descendants(int t) const {
  std::vector<int> out, stack{t};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int c : nodes[v].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TreeDecomposition::subtree_vertices(int t) const {
  std::vector<int> out;
  for (int d : descendants(t))
    out.insert(out.end(), nodes[d].bag.begin(), nodes[d].bag.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> TreeDecomposition::adhesion(int t) const {
  if (t == root) return {};
  auto inside = subtree_vertices(t);
  std::vector<char> in_subtree(descendants(t).size(), 0);
  std::vector<char> is_inside_node(nodes.size(), 0);
  for (int d : descendants(t)) is_inside_node[d] = 1;
  std::vector<int> outside;
  for (int u = 0; u < size(); ++u)
    if (!is_inside_node[u])
      outside.insert(outside.end(), nodes[u].bag.begin(), nodes[u].bag.end());
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
  std::vector<int> adhesion;
  std::set_intersection(inside.begin(), inside.end(), outside.begin(), outside.end(),
                        std::back_inserter(adhesion));
  return adhesion;
}

TreeDecomposition trivial_decomposition(const WeightedMultigraph& g) {
  if (!g.is_connected())
    throw InputError("trivial decomposition needs a connected graph");
  TreeDecomposition td;
  td.nodes.resize(1);
  td.nodes[0].bag.resize(g.n());
  std::iota(td.nodes[0].bag.begin(), td.nodes[0].bag.end(), 0);
  td.root = 0;
  return td;
}

namespace {

bool structurally_sound(const TreeDecomposition& td, std::string* why) {
  int n = td.size();
  if (n == 0) {
    *why = "decomposition has no nodes";
    return false;
  }
  if (td.root < 0 || td.root >= n) {
    *why = "root id out of range";
    return false;
  }
  if (td.nodes[td.root].parent != -1) {
    *why = "root has a parent";
    return false;
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{td.root};
  int visited = 0;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (seen[t]) {
      *why = "cycle in decomposition tree";
      return false;
    }
    seen[t] = 1;
    ++visited;
    for (int c : td.nodes[t].children) {
      if (c < 0 || c >= n || td.nodes[c].parent != t) {
        *why = "parent/child links inconsistent";
        return false;
      }
      stack.push_back(c);
    }
  }
  if (visited != n) {
    *why = "decomposition tree is not connected";
    return false;
  }
  return true;
}

}  // namespace

DecompositionReport verify_decomposition(const WeightedMultigraph& g,
                                         const TreeDecomposition& td) {
  DecompositionReport report;
  std::string why;
  if (!structurally_sound(td, &why)) {
    report.first_violation = why;
    return report;
  }
  std::vector<char> covered(g.n(), 0);
  for (const auto& node : td.nodes)
    for (int v : node.bag) {
      if (v < 0 || v >= g.n()) {
        report.first_violation = "bag vertex out of range";
        return report;
      }
      covered[v] = 1;
    }
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v]) {
      report.first_violation = "vertex " + std::to_string(v) + " is in no bag";
      return report;
    }
  for (const auto& e : g.edges()) {
    bool found = false;
    for (const auto& node : td.nodes) {
      if (std::binary_search(node.bag.begin(), node.bag.end(), e.u) &&
          std::binary_search(node.bag.begin(), node.bag.end(), e.v)) {
        found = true;
        break;
      }
    }
    if (!found) {
      report.first_violation = "edge {" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + "} is in no bag";
      return report;
    }
  }
  // Connectivity of the node set of each vertex.
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> holders;
    for (int t = 0; t < td.size(); ++t)
      if (std::binary_search(td.nodes[t].bag.begin(), td.nodes[t].bag.end(), v))
        holders.push_back(t);
    if (holders.empty()) continue;
    std::vector<char> in_holders(td.size(), 0), seen(td.size(), 0);
    for (int t : holders) in_holders[t] = 1;
    std::vector<int> stack{holders[0]};
    seen[holders[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++reached;
      std::vector<int> neighbors = td.nodes[t].children;
      if (td.nodes[t].parent != -1) neighbors.push_back(td.nodes[t].parent);
      for (int u : neighbors)
        if (in_holders[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (reached != static_cast<int>(holders.size())) {
      report.first_violation =
          "nodes holding vertex " + std::to_string(v) + " are not connected";
      return report;
    }
  }
  report.valid = true;

  auto adj = g.support_adjacency();
  report.compact = true;
  for (int t = 0; t < td.size() && report.compact; ++t) {
    auto inside = td.subtree_vertices(t);
    auto adhesion = td.adhesion(t);
    report.max_adhesion = std::max(report.max_adhesion,
                                   static_cast<int>(adhesion.size()));
    std::vector<int> core;
    std::set_difference(inside.begin(), inside.end(), adhesion.begin(),
                        adhesion.end(), std::back_inserter(core));
    if (core.empty()) {
      if (!adhesion.empty()) {
        report.compact = false;
        report.first_violation =
            "node " + std::to_string(t) + ": empty core with nonempty adhesion";
      }
      continue;
    }
    std::vector<char> in_core(g.n(), 0);
    for (int v : core) in_core[v] = 1;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{core[0]};
    seen[core[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int u : adj[v])
        if (in_core[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (reached != static_cast<int>(core.size())) {
      report.compact = false;
      report.first_violation =
          "node " + std::to_string(t) + ": subtree core is disconnected";
      continue;
    }
    std::vector<int> boundary;
    for (int v : core)
      for (int u : adj[v])
        if (!in_core[u]) boundary.push_back(u);
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    if (boundary != adhesion) {
      report.compact = false;
      report.first_violation = "node " + std::to_string(t) +
                               ": core neighborhood differs from adhesion";
    }
  }
  return report;
}

bool verify_unbreakable(const WeightedMultigraph& g, const std::vector<int>& s,
                        long long a, long long b, int cap) {
  int n = g.n();
  if (n > cap)
    throw InputError("unbreakability check refuses graphs beyond " +
                     std::to_string(cap) + " vertices");
  if (n > 62) throw InputError("unbreakability check needs at most 62 vertices");
  unsigned long long smask = 0;
  for (int v : s) {
    if (v < 0 || v >= n) throw InputError("vertex id out of range");
    smask |= 1ULL << v;
  }
  if (static_cast<long long>(__builtin_popcountll(smask)) <= a) return true;

  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const auto& e : g.edges()) {
    w[e.u][e.v] += e.mult;
    w[e.v][e.u] += e.mult;
  }
  std::vector<long long> row_total(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) row_total[v] += w[v][u];

  // Gray-code walk over all subsets, updating the cut value incrementally:
  // toggling v changes the cut by row_total[v] - 2 * w(v, S without v).
  unsigned long long total = 1ULL << n;
  unsigned long long cur = 0;
  long long cut = 0;
  for (unsigned long long i = 1; i < total; ++i) {
    int v = __builtin_ctzll(i);
    unsigned long long bit = 1ULL << v;
    unsigned long long rest = cur & ~bit;
    long long inside = 0;
    for (int u = 0; u < n; ++u)
      if (rest >> u & 1) inside += w[v][u];
    long long delta = row_total[v] - 2 * inside;
    if (cur & bit) {
      cut -= delta;
      cur &= ~bit;
    } else {
      cut += delta;
      cur |= bit;
    }
    if (cur == 0 || cur == total - 1) continue;
    if (cut <= b) {
      long long in_s = __builtin_popcountll(cur & smask);
      long long out_s = __builtin_popcountll(smask & ~cur);
      if (in_s > a && out_s > a) return false;
    }
  }
  return true;
}

TreeDecomposition parse_tree_decomposition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<int, std::vector<int>> bags;
  std::vector<std::pair<int, int>> links;
  auto fail = [&](const std::string& msg) {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "b") {
      int id;
      if (!(fields >> id)) fail("malformed bag line");
      if (bags.count(id)) fail("duplicate bag id");
      std::vector<int> bag;
      int v;
      while (fields >> v) bag.push_back(v);
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      bags[id] = bag;
    } else if (tag == "t") {
      int p, c;
      if (!(fields >> p >> c)) fail("malformed tree line");
      links.push_back({p, c});
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (bags.empty()) throw InputError("decomposition file declares no bags");
  std::map<int, int> index;
  TreeDecomposition td;
  for (const auto& [id, bag] : bags) {
    index[id] = td.size();
    td.nodes.push_back({bag, -1, {}});
  }
  for (auto [p, c] : links) {
    if (!index.count(p) || !index.count(c))
      throw InputError("tree line references unknown bag id");
    int pi = index[p], ci = index[c];
    if (td.nodes[ci].parent != -1) throw InputError("bag has two parents");
    td.nodes[ci].parent = pi;
    td.nodes[pi].children.push_back(ci);
  }
  int root = -1;
  for (int t = 0; t < td.size(); ++t)
    if (td.nodes[t].parent == -1) {
      if (root != -1) throw InputError("decomposition tree has two roots");
      root = t;
    }
  if (root == -1) throw InputError("decomposition tree has no root");
  td.root = root;
  return td;
}

std::string serialize_tree_decomposition(const TreeDecomposition& td) {
  std::ostringstream out;
  for (int t = 0; t < td.size(); ++t) {
    out << "b " << t;
    for (int v : td.nodes[t].bag) out << " " << v;
    out << "\n";
  }
  for (int t = 0; t < td.size(); ++t)
    for (int c : td.nodes[t].children) out << "t " << t << " " << c << "\n";
  return out.str();
}

}  // namespace kcut
