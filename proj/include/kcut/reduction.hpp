#pragma once

#include <cstdint>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"

namespace kcut {

/// Weighted-to-unit rounding stage: edges heavier than the guess are
/// contracted, the rest become ceil(w/theta) unit copies.
struct RoundingStage {
  Rational theta = 0;
  std::vector<int> vertex_map;  // original vertex -> rounded vertex id
  int rounded_n = 0;
  long long unit_edges = 0;  // copies after rounding
};

struct DeletionStage {
  Rational threshold = 0;
  std::vector<std::vector<Edge>> removed_sets;  // edges of each removed cut
  bool capped = false;  // stopped at the k-2 removal bound before cleaning up
};

struct SamplingStage {
  bool applied = false;
  double p = 1.0;
  std::uint64_t seed = 0;
};

/// One unit instance handed to the solver, with local-id vertex mapping.
struct ReducedInstance {
  WeightedMultigraph graph;     // unit weights, connected
  std::vector<int> vertex_ids;  // rounded-graph vertex per local vertex
  SamplingStage sampling;
};

/// All instances produced by one budget guess, with every stage recorded so
/// solutions can be mapped back to the original vertices.
struct InstanceGroup {
  Rational lambda_guess;
  long long lambda_unit = 0;  // budget valid for the rounded unit graph
  RoundingStage rounding;
  DeletionStage deletion;
  std::vector<ReducedInstance> components;
};

struct InstanceCollection {
  std::vector<InstanceGroup> groups;
};

/// Rounds to a unit multigraph: contracts edges heavier than lambda, then
/// replaces each edge by ceil(w/theta) copies with theta = eps*lambda/m.
/// Total copies stay below 2 m^2 / eps.
std::pair<WeightedMultigraph, RoundingStage> knapsack_round(
    const WeightedMultigraph& g, const Rational& eps, const Rational& lambda);

/// Repeatedly removes a component's global min cut while its value is
/// positive and at most eps*lambda/(2(k-1)), stopping after k-2 removals.
std::pair<WeightedMultigraph, DeletionStage> delete_small_cuts(
    const WeightedMultigraph& g, const Rational& eps, long long lambda, int k);

/// Keeps each unit copy independently with probability
/// p = 100 ln(n) / (eps^2 * mincut), clamped to 1. Deterministic per seed.
std::pair<WeightedMultigraph, SamplingStage> bk_sample(const WeightedMultigraph& g,
                                                       const Rational& eps,
                                                       std::uint64_t seed);

/// Compositions of k into one positive count per component, capped by the
/// component sizes. Empty when k cannot be split that way.
std::vector<std::vector<int>> component_assignments(const std::vector<int>& sizes,
                                                    int k);

/// Full pipeline over a sweep of power-of-two budget guesses.
InstanceCollection build_instance_collection(const WeightedMultigraph& g, int k,
                                             const Rational& eps,
                                             std::uint64_t seed);

/// Maps a partition of one reduced component back to original vertex ids.
/// Original vertices contracted into the same rounded vertex land in the
/// same part.
std::vector<std::vector<int>> lift_solution(const InstanceGroup& group,
                                            int component_index,
                                            const Partition& local_partition);

}  // namespace kcut
