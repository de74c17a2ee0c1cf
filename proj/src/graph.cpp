#include "kcut/graph.hpp"

#include <algorithm>
#include <sstream>

namespace kcut {

namespace {

std::vector<Edge> canonicalize(int n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("vertex id out of range");
    if (e.u == e.v) throw InputError("self-loops are not allowed");
    if (e.w < 0) throw InputError("negative edge weight");
    if (e.mult <= 0) throw InputError("edge multiplicity must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.w < b.w;
  });
  std::vector<Edge> merged;
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v &&
        merged.back().w == e.w) {
      merged.back().mult += e.mult;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

}  // namespace

WeightedMultigraph::WeightedMultigraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  edges_ = canonicalize(n, std::move(edges));
}

long long WeightedMultigraph::edge_count() const {
  long long total = 0;
  for (const auto& e : edges_) total += e.mult;
  return total;
}

bool WeightedMultigraph::is_unit() const {
  for (const auto& e : edges_)
    if (e.w != 1) return false;
  return true;
}

bool WeightedMultigraph::all_integer() const {
  for (const auto& e : edges_)
    if (!rat_is_integer(e.w)) return false;
  return true;
}

Rational WeightedMultigraph::total_weight() const {
  Rational total = 0;
  for (const auto& e : edges_) total += e.w * e.mult;
  return total;
}

Rational WeightedMultigraph::max_edge_weight() const {
  Rational best = 0;
  for (const auto& e : edges_) best = std::max(best, e.w);
  return best;
}

Rational WeightedMultigraph::cut_weight(const std::vector<int>& s) const {
  std::vector<char> in(n_, 0);
  for (int v : s) {
    if (v < 0 || v >= n_) throw InputError("vertex id out of range in cut set");
    in[v] = 1;
  }
  Rational total = 0;
  for (const auto& e : edges_)
    if (in[e.u] != in[e.v]) total += e.w * e.mult;
  return total;
}

std::vector<std::vector<int>> WeightedMultigraph::support_adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

std::vector<std::vector<int>> WeightedMultigraph::components() const {
  auto adj = support_adjacency();
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : adj[v])
        if (comp[u] == -1) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool WeightedMultigraph::is_connected() const {
  if (n_ == 0) return true;
  return components().size() == 1;
}

WeightedMultigraph WeightedMultigraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> idx(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_) throw InputError("vertex id out of range");
    idx[v] = static_cast<int>(i);
  }
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (idx[e.u] != -1 && idx[e.v] != -1)
      out.push_back({idx[e.u], idx[e.v], e.w, e.mult});
  return WeightedMultigraph(static_cast<int>(vertices.size()), std::move(out));
}

WeightedMultigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  long long seen = 0;
  std::vector<Edge> edges;
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
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      if (!(fields >> n >> m)) fail("malformed header, expected 'p <n> <m>'");
      if (n < 0 || m < 0) fail("negative count in header");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge line before header");
      int u, v;
      std::string w;
      if (!(fields >> u >> v >> w)) fail("malformed edge, expected 'e <u> <v> <w>'");
      if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
      if (u == v) fail("self-loop");
      Rational weight;
      try {
        weight = parse_rational(w);
      } catch (const InputError& err) {
        fail(err.what());
      }
      if (weight < 0) fail("negative weight");
      edges.push_back({u, v, weight, 1});
      ++seen;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw InputError("missing header 'p <n> <m>'");
  if (seen != m)
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(seen));
  return WeightedMultigraph(n, std::move(edges));
}

std::string serialize_graph(const WeightedMultigraph& g) {
  std::ostringstream out;
  out << "p " << g.n() << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges())
    for (long long i = 0; i < e.mult; ++i)
      out << "e " << e.u << " " << e.v << " " << rat_to_string(e.w) << "\n";
  return out.str();
}

}  // namespace kcut
