#include "kcut/oracle.hpp"

#include <algorithm>

namespace kcut {

namespace {

void enumerate_rec(int n, int k, std::vector<int>& labels, int pos, int used,
                   const std::function<bool(const std::vector<int>&)>& cb,
                   bool& keep_going) {
  if (!keep_going) return;
  if (pos == n) {
    if (used == k) keep_going = cb(labels);
    return;
  }
  // Prune: the remaining positions must still be able to open enough blocks.
  if (used + (n - pos) < k) return;
  int limit = std::min(used, k - 1);
  for (int b = 0; b <= limit && keep_going; ++b) {
    labels[pos] = b;
    enumerate_rec(n, k, labels, pos + 1, std::max(used, b + 1), cb, keep_going);
  }
}

}  // namespace

void enumerate_k_partitions(int n, int k, int cap,
                            const std::function<bool(const std::vector<int>&)>& cb) {
  if (k < 1) throw InputError("k must be at least 1");
  if (n < 0) throw InputError("negative vertex count");
  if (n > cap)
    throw InputError("refusing to enumerate partitions of " + std::to_string(n) +
                     " vertices (cap " + std::to_string(cap) + ")");
  if (k > n) return;
  std::vector<int> labels(n, 0);
  bool keep_going = true;
  if (n == 0) return;
  labels[0] = 0;
  enumerate_rec(n, k, labels, 1, 1, cb, keep_going);
}

Partition partition_from_labels(const std::vector<int>& labels) {
  int blocks = 0;
  for (int l : labels) blocks = std::max(blocks, l + 1);
  Partition p;
  p.parts.assign(blocks, {});
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    p.parts[labels[v]].push_back(v);
    p.ground.push_back(v);
  }
  return p;
}

namespace {

struct IntEdge {
  int u, v;
  long long w;
};

// minmax/minsum over integer weights without rational arithmetic.
OracleResult brute_int(const WeightedMultigraph& g, int k, const Objective& obj,
                       const OracleOptions& opts) {
  std::vector<IntEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges())
    edges.push_back({e.u, e.v, (e.w * e.mult).convert_to<long long>()});
  OracleResult result;
  std::vector<long long> cuts(k);
  bool minsum = obj.kind == Objective::Kind::minsum;
  long long best = -1;
  enumerate_k_partitions(g.n(), k, opts.cap, [&](const std::vector<int>& labels) {
    std::fill(cuts.begin(), cuts.end(), 0);
    for (const auto& e : edges) {
      if (labels[e.u] == labels[e.v]) continue;
      cuts[labels[e.u]] += e.w;
      cuts[labels[e.v]] += e.w;
    }
    long long score = 0;
    if (minsum)
      for (long long c : cuts) score += c;
    else
      for (long long c : cuts) score = std::max(score, c);
    ++result.evaluated_count;
    if (best == -1 || score < best) {
      best = score;
      result.witnesses.clear();
      result.witnesses.push_back(partition_from_labels(labels));
    } else if (score == best && result.witnesses.size() < opts.max_witnesses) {
      result.witnesses.push_back(partition_from_labels(labels));
    }
    return true;
  });
  if (best >= 0) {
    result.feasible = true;
    result.opt_value = best;
    result.opt_numeric = static_cast<double>(best);
  }
  return result;
}

OracleResult brute_exact(const WeightedMultigraph& g, int k, const Objective& obj,
                         const OracleOptions& opts) {
  OracleResult result;
  bool have = false;
  Rational best = 0;
  std::vector<Rational> best_cuts;
  enumerate_k_partitions(g.n(), k, opts.cap, [&](const std::vector<int>& labels) {
    auto p = partition_from_labels(labels);
    auto cuts = per_part_cuts(g, p.parts);
    Rational score = cost_power(cuts, obj);
    ++result.evaluated_count;
    if (!have || score < best) {
      have = true;
      best = score;
      best_cuts = cuts;
      result.witnesses.clear();
      result.witnesses.push_back(std::move(p));
    } else if (score == best && result.witnesses.size() < opts.max_witnesses) {
      result.witnesses.push_back(std::move(p));
    }
    return true;
  });
  if (have) {
    result.feasible = true;
    result.opt_value = best;
    result.opt_numeric = cost_numeric(best_cuts, obj);
  }
  return result;
}

}  // namespace

OracleResult brute_opt(const WeightedMultigraph& g, int k, const Objective& obj,
                       const OracleOptions& opts) {
  if (k < 1) throw InputError("k must be at least 1");
  bool fast = g.all_integer() && obj.kind != Objective::Kind::lp &&
              g.total_weight() < Rational(BigInt(1) << 60);
  return fast ? brute_int(g, k, obj, opts) : brute_exact(g, k, obj, opts);
}

std::vector<Partition> all_optima(const WeightedMultigraph& g, int k,
                                  const Objective& obj, const OracleOptions& opts) {
  OracleOptions all = opts;
  all.max_witnesses = static_cast<std::size_t>(-1);
  auto result = brute_opt(g, k, obj, all);
  return result.witnesses;
}

}  // namespace kcut
