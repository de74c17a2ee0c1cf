#include "kcut/driver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace kcut {

namespace {

struct ScoredPartition {
  bool exact = false;
  Rational power = 0;
  double numeric = 0;

  bool better_than(const ScoredPartition& other) const {
    if (exact && other.exact) return power < other.power;
    return numeric < other.numeric;
  }
};

ScoredPartition score_partition(const WeightedMultigraph& g, const Partition& p,
                                const Objective& obj) {
  ScoredPartition s;
  auto cuts = per_part_cuts(g, p.parts);
  s.numeric = cost_numeric(cuts, obj);
  if (obj.integral_p()) {
    s.exact = true;
    s.power = cost_power(cuts, obj);
  }
  return s;
}

}  // namespace

SolveOutcome exact_fpt(const WeightedMultigraph& g, int k, long long lambda,
                       const Objective& obj, const ExactOptions& opts) {
  if (k < 1) throw InputError("k must be at least 1");
  SolveOutcome outcome;
  if (k > g.n()) return outcome;

  auto comps = g.components();
  int c = static_cast<int>(comps.size());
  std::vector<int> sizes;
  for (const auto& comp : comps) sizes.push_back(static_cast<int>(comp.size()));

  // One exact solve per (component, part count), shared across assignments.
  std::map<std::pair<int, int>, DPResult> cache;
  auto solve_component = [&](int ci, int ki) -> const DPResult& {
    auto key = std::make_pair(ci, ki);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sub = g.induced(comps[ci]);
    DPResult best;
    auto trees = thorup_trees(sub, ki, {0, std::max(opts.tree_retry, 1)});
    for (const auto& tree : trees) {
      DPResult r = solve_dp(sub, ki, lambda, obj, opts.dp, &tree);
      if (r.feasible && (!best.feasible || r.opt_score < best.opt_score)) best = r;
      if (!best.feasible) best.stats.rows += r.stats.rows;
    }
    return cache.emplace(key, std::move(best)).first->second;
  };

  bool have_best = false;
  ScoredPartition best_score;
  Partition best_partition;
  DPStats stats;

  for (const auto& assignment : component_assignments(sizes, k)) {
    bool feasible = true;
    std::vector<std::vector<int>> parts;
    for (int ci = 0; ci < c && feasible; ++ci) {
      int ki = assignment[ci];
      if (ki == 1) {
        parts.push_back(comps[ci]);
        continue;
      }
      const DPResult& r = solve_component(ci, ki);
      stats.rows += r.stats.rows;
      stats.updates += r.stats.updates;
      if (!r.feasible) {
        feasible = false;
        break;
      }
      for (const auto& part : r.partition.parts) {
        std::vector<int> global;
        for (int local : part) global.push_back(comps[ci][local]);
        std::sort(global.begin(), global.end());
        parts.push_back(std::move(global));
      }
    }
    if (!feasible) continue;
    Partition p;
    p.ground.resize(g.n());
    std::iota(p.ground.begin(), p.ground.end(), 0);
    p.parts = std::move(parts);
    p = canonical(std::move(p));
    auto s = score_partition(g, p, obj);
    if (!have_best || s.better_than(best_score) ||
        (!s.better_than(best_score) && !best_score.better_than(s) &&
         p.parts < best_partition.parts)) {
      have_best = true;
      best_score = s;
      best_partition = p;
    }
  }
  if (!have_best) {
    outcome.stats = stats;
    return outcome;
  }
  outcome.feasible = true;
  outcome.partition = best_partition;
  outcome.per_part_cut = per_part_cuts(g, best_partition.parts);
  outcome.cost = best_score.numeric;
  outcome.cost_power = best_score.power;
  outcome.stats = stats;
  return outcome;
}

SchemeOutcome approx_scheme(const WeightedMultigraph& g, int k, const Rational& eps,
                            std::uint64_t seed, const Objective& obj,
                            const SchemeOptions& opts) {
  if (k < 2) throw InputError("k must be at least 2");
  if (eps <= 0 || eps >= 1) throw InputError("eps must lie in (0,1)");
  SchemeOutcome outcome;
  if (k > g.n()) return outcome;

  Rational eps_inner = eps / 20;  // stages compose to below 1+eps
  double e = rat_to_double(eps_inner);
  double log_n = std::log(std::max(2.0, static_cast<double>(g.n())));
  long long cap = static_cast<long long>(
      std::ceil(opts.cap_constant * k * log_n / (e * e * e)));

  bool have_best = false;
  ScoredPartition best_score;

  for (int attempt = 0; attempt < std::max(1, opts.retries); ++attempt) {
    auto collection = build_instance_collection(g, k, eps_inner, seed + attempt);
    for (const auto& group : collection.groups) {
      int c = static_cast<int>(group.components.size());
      std::vector<int> sizes;
      for (const auto& inst : group.components)
        sizes.push_back(inst.graph.n());
      auto assignments = component_assignments(sizes, k);
      if (assignments.empty()) continue;

      std::map<std::pair<int, int>, DPResult> cache;
      auto solve_component = [&](int ci, int ki) -> const DPResult& {
        auto key = std::make_pair(ci, ki);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const auto& inst = group.components[ci];
        long long m = inst.graph.edge_count();
        long long budget = std::min(cap, m);
        DPResult r;
        while (true) {
          r = solve_dp(inst.graph, ki, budget, obj, opts.exact.dp);
          if (r.feasible || budget >= m) break;
          budget = std::min(budget * 2, m);  // completeness guard
        }
        return cache.emplace(key, std::move(r)).first->second;
      };

      for (const auto& assignment : assignments) {
        bool feasible = true;
        std::vector<std::vector<int>> parts;
        DPStats stats;
        for (int ci = 0; ci < c && feasible; ++ci) {
          int ki = assignment[ci];
          Partition local;
          if (ki == 1) {
            local.ground.resize(group.components[ci].graph.n());
            std::iota(local.ground.begin(), local.ground.end(), 0);
            local.parts.push_back(local.ground);
          } else {
            const DPResult& r = solve_component(ci, ki);
            stats.rows += r.stats.rows;
            stats.updates += r.stats.updates;
            if (!r.feasible) {
              feasible = false;
              break;
            }
            local = r.partition;
          }
          for (auto& part : lift_solution(group, ci, local))
            if (!part.empty()) parts.push_back(std::move(part));
        }
        if (!feasible || static_cast<int>(parts.size()) != k) continue;
        Partition p;
        p.ground.resize(g.n());
        std::iota(p.ground.begin(), p.ground.end(), 0);
        p.parts = std::move(parts);
        p = canonical(std::move(p));
        auto s = score_partition(g, p, obj);
        if (!have_best || s.better_than(best_score)) {
          have_best = true;
          best_score = s;
          outcome.partition = p;
          outcome.certificate.lambda_guess = group.lambda_guess;
          outcome.certificate.lambda_unit = group.lambda_unit;
          outcome.certificate.theta = group.rounding.theta;
          outcome.certificate.removed_cut_sets =
              static_cast<int>(group.deletion.removed_sets.size());
          outcome.certificate.sample_p =
              group.components.empty() ? 1.0 : group.components[0].sampling.p;
          outcome.certificate.lambda_cap = cap;
          outcome.certificate.retry_used = attempt;
          outcome.certificate.stats = stats;
        }
      }
    }
  }

  // All-zero weights (or no edges): any split is optimal.
  if (!have_best) {
    Partition p;
    p.ground.resize(g.n());
    std::iota(p.ground.begin(), p.ground.end(), 0);
    for (int i = 0; i < k - 1; ++i) p.parts.push_back({i});
    std::vector<int> rest;
    for (int v = k - 1; v < g.n(); ++v) rest.push_back(v);
    p.parts.push_back(rest);
    outcome.partition = canonical(std::move(p));
    best_score = score_partition(g, outcome.partition, obj);
    have_best = true;
  }

  outcome.feasible = true;
  outcome.cost = best_score.numeric;
  outcome.cost_power = best_score.power;
  outcome.per_part_cut = per_part_cuts(g, outcome.partition.parts);
  return outcome;
}

}  // namespace kcut
