#include "kcut/instancegen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace kcut {

namespace {

void require_simple_unit(const WeightedMultigraph& g) {
  if (!g.is_unit()) throw InputError("base graph must have unit weights");
  for (const auto& e : g.edges())
    if (e.mult != 1) throw InputError("base graph must be simple");
}

std::vector<long long> degrees(const WeightedMultigraph& g) {
  std::vector<long long> deg(g.n(), 0);
  for (const auto& e : g.edges()) {
    deg[e.u] += e.mult;
    deg[e.v] += e.mult;
  }
  return deg;
}

}  // namespace

GadgetSpec gadget_spec(const WeightedMultigraph& base, int h) {
  require_simple_unit(base);
  if (h < 2) throw InputError("clique size must be at least 2");
  GadgetSpec spec;
  spec.base_n = base.n();
  spec.base_m = static_cast<int>(base.edge_count());
  spec.h = h;
  long long n = spec.base_n, m = spec.base_m;
  spec.M = std::max((n + 1) * (n + 1), 3 * m);
  spec.N = spec.M * n + 2;
  spec.threshold = spec.M * h - static_cast<long long>(h) * (h - 1);
  return spec;
}

std::pair<WeightedMultigraph, GadgetSpec> clique_gadget(const WeightedMultigraph& base,
                                                        int h) {
  GadgetSpec spec = gadget_spec(base, h);
  long long n = spec.base_n, N = spec.N;
  long long total = (n + 1) * N;
  if (total > 2000000) throw InputError("gadget would be too large to materialize");
  auto deg = degrees(base);
  std::vector<Edge> edges;
  auto uid = [&](long long i, long long j) { return static_cast<int>(i * N + j); };
  // One N-clique per base vertex plus the balancing clique (block index n).
  for (long long i = 0; i <= n; ++i)
    for (long long j = 0; j < N; ++j)
      for (long long j2 = j + 1; j2 < N; ++j2)
        edges.push_back({uid(i, j), uid(i, j2), 1, 1});
  for (const auto& e : base.edges()) edges.push_back({uid(e.u, 0), uid(e.v, 0), 1, 1});
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < spec.M - deg[i]; ++j)
      edges.push_back({uid(i, j), uid(n, j), 1, 1});
  return {WeightedMultigraph(static_cast<int>(total), std::move(edges)), spec};
}

std::pair<WeightedMultigraph, GadgetSpec> quotient_graph(const WeightedMultigraph& base,
                                                         int h) {
  GadgetSpec spec = gadget_spec(base, h);
  auto deg = degrees(base);
  std::vector<Edge> edges;
  for (const auto& e : base.edges()) edges.push_back({e.u, e.v, 1, 1});
  int hub = spec.base_n;
  for (int v = 0; v < spec.base_n; ++v)
    edges.push_back({v, hub, Rational(spec.M - deg[v]), 1});
  return {WeightedMultigraph(spec.base_n + 1, std::move(edges)), spec};
}

std::vector<WeightedMultigraph> random_corpus(const RandomCorpusSpec& spec) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min)
    throw InputError("bad vertex range");
  if (spec.density < 0 || spec.density > 1) throw InputError("bad density");
  if (spec.weight_min < 0 || spec.weight_max < spec.weight_min)
    throw InputError("bad weight range");
  std::mt19937_64 rng(spec.seed);
  auto coin = [&](double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
  };
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<WeightedMultigraph> out;
  while (static_cast<int>(out.size()) < spec.count) {
    int n = pick(spec.n_min, spec.n_max);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(spec.density))
          edges.push_back({u, v, Rational(pick(spec.weight_min, spec.weight_max)), 1});
    WeightedMultigraph g(n, std::move(edges));
    if (n == 1 || g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

namespace {

int pair_index(int n, int i, int j) {  // i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t canonical_bits(int n, std::uint64_t bits,
                             const std::vector<std::vector<int>>& perms) {
  std::uint64_t best = ~0ULL;
  for (const auto& perm : perms) {
    std::uint64_t relabeled = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!(bits >> pair_index(n, i, j) & 1)) continue;
        int a = perm[i], b = perm[j];
        if (a > b) std::swap(a, b);
        relabeled |= 1ULL << pair_index(n, a, b);
      }
    best = std::min(best, relabeled);
  }
  return best;
}

}  // namespace

std::vector<WeightedMultigraph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > 7) throw InputError("graph enumeration supports 1 <= n <= 7");
  // Grow canonical forms one vertex at a time.
  std::set<std::uint64_t> level{0};  // the 1-vertex graph
  for (int t = 2; t <= n; ++t) {
    std::vector<std::vector<int>> perms;
    std::vector<int> base(t);
    std::iota(base.begin(), base.end(), 0);
    do {
      perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::set<std::uint64_t> next;
    for (std::uint64_t old_bits : level) {
      // Reindex the (t-1)-vertex graph into the t-vertex pair numbering.
      std::uint64_t lifted = 0;
      for (int i = 0; i < t - 1; ++i)
        for (int j = i + 1; j < t - 1; ++j)
          if (old_bits >> pair_index(t - 1, i, j) & 1)
            lifted |= 1ULL << pair_index(t, i, j);
      for (std::uint64_t nbrs = 0; nbrs < (1ULL << (t - 1)); ++nbrs) {
        std::uint64_t bits = lifted;
        for (int i = 0; i < t - 1; ++i)
          if (nbrs >> i & 1) bits |= 1ULL << pair_index(t, i, t - 1);
        next.insert(canonical_bits(t, bits, perms));
      }
    }
    level = std::move(next);
  }
  std::vector<WeightedMultigraph> out;
  for (std::uint64_t bits : level) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (bits >> pair_index(n, i, j) & 1) edges.push_back({i, j, 1, 1});
    WeightedMultigraph g(n, std::move(edges));
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace kcut
