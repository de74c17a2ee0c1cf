#pragma once

#include <cstdint>
#include <optional>

#include "kcut/dp.hpp"
#include "kcut/reduction.hpp"

namespace kcut {

struct ExactOptions {
  int tree_retry = 1;  // rerun the table pass over this many guide trees
  DPOptions dp;
};

struct SolveOutcome {
  bool feasible = false;
  double cost = 0;            // objective value
  Rational cost_power = 0;    // exact comparable score
  Partition partition;
  std::vector<Rational> per_part_cut;
  DPStats stats;
};

/// Exact solve on a unit multigraph with per-part boundary budget lambda.
/// Disconnected inputs are split over all ways of distributing the k parts
/// among the components.
SolveOutcome exact_fpt(const WeightedMultigraph& g, int k, long long lambda,
                       const Objective& obj = Objective::minmax(),
                       const ExactOptions& opts = {});

/// One reduced instance's record in the scheme certificate.
struct SchemeCertificate {
  Rational lambda_guess = 0;
  long long lambda_unit = 0;
  Rational theta = 0;
  int removed_cut_sets = 0;
  double sample_p = 1.0;
  long long lambda_cap = 0;
  int retry_used = 0;
  DPStats stats;
};

struct SchemeOutcome {
  bool feasible = false;
  double cost = 0;
  Rational cost_power = 0;
  Partition partition;
  std::vector<Rational> per_part_cut;
  SchemeCertificate certificate;
};

struct SchemeOptions {
  int retries = 1;           // independent seeds tried; best result kept
  double cap_constant = 100; // budget cap factor for the reduced instances
  ExactOptions exact;
};

/// Randomized (1+eps)-approximation: rounds to unit instances with small
/// optimum, solves them exactly, lifts the best solution back.
SchemeOutcome approx_scheme(const WeightedMultigraph& g, int k, const Rational& eps,
                            std::uint64_t seed,
                            const Objective& obj = Objective::minmax(),
                            const SchemeOptions& opts = {});

}  // namespace kcut
