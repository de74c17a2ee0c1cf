#include "kcut/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "kcut/maxflow.hpp"

namespace kcut {

std::pair<WeightedMultigraph, RoundingStage> knapsack_round(
    const WeightedMultigraph& g, const Rational& eps, const Rational& lambda) {
  if (lambda <= 0) throw InputError("rounding needs a positive budget");
  if (eps <= 0 || eps >= 1) throw InputError("eps must lie in (0,1)");

  // Contract every edge heavier than the budget.
  std::vector<int> leader(g.n());
  std::iota(leader.begin(), leader.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (leader[v] != v) v = leader[v] = leader[leader[v]];
    return v;
  };
  for (const auto& e : g.edges())
    if (e.w > lambda) leader[find(e.u)] = find(e.v);

  RoundingStage stage;
  stage.vertex_map.resize(g.n());
  int next_id = 0;
  std::vector<int> id_of_root(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    int r = find(v);
    if (id_of_root[r] == -1) id_of_root[r] = next_id++;
    stage.vertex_map[v] = id_of_root[r];
  }
  stage.rounded_n = next_id;

  std::vector<Edge> surviving;
  long long m = 0;
  for (const auto& e : g.edges()) {
    int u = stage.vertex_map[e.u], v = stage.vertex_map[e.v];
    if (u == v) continue;  // contracted away
    surviving.push_back({u, v, e.w, e.mult});
    m += e.mult;
  }

  std::vector<Edge> unit_edges;
  if (m > 0) {
    stage.theta = eps * lambda / m;
    for (const auto& e : surviving) {
      Rational ratio = e.w / stage.theta;
      BigInt copies = rat_num(ratio) / rat_den(ratio);
      if (copies * rat_den(ratio) != rat_num(ratio)) copies += 1;  // ceil
      long long c = copies.convert_to<long long>();
      if (c > 0) unit_edges.push_back({e.u, e.v, 1, c * e.mult});
    }
  }
  WeightedMultigraph rounded(stage.rounded_n, std::move(unit_edges));
  stage.unit_edges = rounded.edge_count();
  return {std::move(rounded), std::move(stage)};
}

std::pair<WeightedMultigraph, DeletionStage> delete_small_cuts(
    const WeightedMultigraph& g, const Rational& eps, long long lambda, int k) {
  if (k < 2) throw InputError("k must be at least 2");
  DeletionStage stage;
  stage.threshold = eps * lambda / (2 * (k - 1));
  std::vector<Edge> edges = g.edges();
  int removals_allowed = k - 2;

  while (static_cast<int>(stage.removed_sets.size()) < removals_allowed) {
    WeightedMultigraph current(g.n(), edges);
    bool removed = false;
    for (const auto& comp : current.components()) {
      if (comp.size() < 2) continue;
      auto sub = current.induced(comp);
      auto cut = global_min_cut(sub);
      if (cut.value <= 0 || cut.value > stage.threshold) continue;
      std::vector<char> side(g.n(), 0);
      for (int local : cut.source_side) side[comp[local]] = 1;
      std::vector<char> in_comp(g.n(), 0);
      for (int v : comp) in_comp[v] = 1;
      std::vector<Edge> kept, gone;
      for (const auto& e : edges) {
        bool crossing = in_comp[e.u] && in_comp[e.v] && side[e.u] != side[e.v];
        (crossing ? gone : kept).push_back(e);
      }
      stage.removed_sets.push_back(std::move(gone));
      edges = std::move(kept);
      removed = true;
      break;
    }
    if (!removed) break;
  }
  // A further removable cut at the bound means the cleanup stopped early.
  if (static_cast<int>(stage.removed_sets.size()) == removals_allowed) {
    WeightedMultigraph current(g.n(), edges);
    for (const auto& comp : current.components()) {
      if (comp.size() < 2) continue;
      auto cut = global_min_cut(current.induced(comp));
      if (cut.value > 0 && cut.value <= stage.threshold) stage.capped = true;
    }
  }
  return {WeightedMultigraph(g.n(), std::move(edges)), std::move(stage)};
}

std::pair<WeightedMultigraph, SamplingStage> bk_sample(const WeightedMultigraph& g,
                                                       const Rational& eps,
                                                       std::uint64_t seed) {
  if (!g.is_unit()) throw InputError("sampling expects unit weights");
  SamplingStage stage;
  stage.seed = seed;
  if (g.n() < 2) return {g, stage};
  if (!g.is_connected()) throw InputError("sampling expects a connected graph");
  auto mincut = global_min_cut(g);
  double cut_value = rat_to_double(mincut.value);
  double e = rat_to_double(eps);
  stage.p = 100.0 * std::log(static_cast<double>(g.n())) / (e * e * cut_value);
  if (stage.p >= 1.0) {
    stage.p = 1.0;
    return {g, stage};
  }
  stage.applied = true;
  std::mt19937_64 rng(seed);
  auto coin = [&]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < stage.p;
  };
  std::vector<Edge> kept;
  for (const auto& e2 : g.edges()) {
    long long copies = 0;
    for (long long i = 0; i < e2.mult; ++i)
      if (coin()) ++copies;
    if (copies > 0) kept.push_back({e2.u, e2.v, 1, copies});
  }
  return {WeightedMultigraph(g.n(), std::move(kept)), stage};
}

std::vector<std::vector<int>> component_assignments(const std::vector<int>& sizes,
                                                    int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(sizes.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == sizes.size()) {
      if (left == 0) out.push_back(current);
      return;
    }
    int remaining_slots = static_cast<int>(sizes.size() - i - 1);
    for (int take = 1; take <= std::min(sizes[i], left - remaining_slots); ++take) {
      current[i] = take;
      rec(i + 1, left - take);
    }
  };
  if (!sizes.empty()) rec(0, k);
  return out;
}

InstanceCollection build_instance_collection(const WeightedMultigraph& g, int k,
                                             const Rational& eps,
                                             std::uint64_t seed) {
  if (k < 2) throw InputError("k must be at least 2");
  if (eps <= 0 || eps >= 1) throw InputError("eps must lie in (0,1)");
  InstanceCollection collection;
  if (g.edge_count() == 0) return collection;

  // Power-of-two guesses covering [smallest weight, 2 * total weight].
  Rational smallest = -1;
  for (const auto& e : g.edges())
    if (e.w > 0 && (smallest < 0 || e.w < smallest)) smallest = e.w;
  if (smallest <= 0) return collection;
  Rational total = g.total_weight();
  Rational guess = 1;
  while (guess > smallest) guess /= 2;
  for (; guess <= 2 * total; guess *= 2) {
    InstanceGroup group;
    group.lambda_guess = guess;
    auto [rounded, rounding] = knapsack_round(g, eps, guess);
    group.rounding = rounding;
    if (rounding.theta > 0) {
      Rational unit_budget = (1 + 4 * eps) * guess / rounding.theta;
      BigInt ceilv = rat_num(unit_budget) / rat_den(unit_budget);
      if (ceilv * rat_den(unit_budget) != rat_num(unit_budget)) ceilv += 1;
      group.lambda_unit = ceilv.convert_to<long long>();
    }
    auto [cleaned, deletion] = delete_small_cuts(rounded, eps, group.lambda_unit, k);
    group.deletion = deletion;
    int comp_index = 0;
    for (const auto& comp : cleaned.components()) {
      ReducedInstance inst;
      inst.vertex_ids = comp;
      auto sub = cleaned.induced(comp);
      if (comp.size() >= 2 && sub.edge_count() > 0) {
        auto [sampled, sampling] =
            bk_sample(sub, eps, seed + 7919 * comp_index + collection.groups.size());
        inst.graph = std::move(sampled);
        inst.sampling = sampling;
      } else {
        inst.graph = std::move(sub);
      }
      group.components.push_back(std::move(inst));
      ++comp_index;
    }
    collection.groups.push_back(std::move(group));
  }
  return collection;
}

std::vector<std::vector<int>> lift_solution(const InstanceGroup& group,
                                            int component_index,
                                            const Partition& local_partition) {
  if (component_index < 0 ||
      component_index >= static_cast<int>(group.components.size()))
    throw InputError("component index out of range");
  const auto& inst = group.components[component_index];
  {
    std::vector<int> ground = local_partition.ground;
    std::sort(ground.begin(), ground.end());
    std::vector<int> expected(inst.graph.n());
    std::iota(expected.begin(), expected.end(), 0);
    if (ground != expected)
      throw InputError("partition does not match the reduced instance");
  }
  // local id -> rounded id; original vertex -> rounded id via the map.
  std::vector<int> rounded_part(group.rounding.rounded_n, -1);
  for (std::size_t i = 0; i < local_partition.parts.size(); ++i)
    for (int local : local_partition.parts[i])
      rounded_part[inst.vertex_ids[local]] = static_cast<int>(i);
  std::vector<std::vector<int>> parts(local_partition.parts.size());
  for (int v = 0; v < static_cast<int>(group.rounding.vertex_map.size()); ++v) {
    int part = rounded_part[group.rounding.vertex_map[v]];
    if (part != -1) parts[part].push_back(v);
  }
  return parts;
}

}  // namespace kcut
