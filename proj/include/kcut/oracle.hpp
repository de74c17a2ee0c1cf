#pragma once

#include <functional>
#include <vector>

#include "kcut/partition.hpp"

namespace kcut {

struct OracleOptions {
  int cap = 12;                    // refuse enumeration beyond this many vertices
  std::size_t max_witnesses = 16;  // witnesses kept by brute_opt
};

struct OracleResult {
  bool feasible = false;
  /// Exact score of the optimum: the cost itself for minmax/minsum, the sum
  /// of p-th powers of the part boundaries for lp.
  Rational opt_value = 0;
  double opt_numeric = 0;  // objective value (lp: 1/p root applied)
  std::vector<Partition> witnesses;  // first = lexicographically smallest
  unsigned long long evaluated_count = 0;
};

/// Calls `cb` with the part label of each vertex (restricted-growth order,
/// blocks numbered by first occurrence) for every partition of {0..n-1}
/// into exactly k nonempty parts. Stops early if cb returns false.
/// k > n yields nothing; n > cap is refused.
void enumerate_k_partitions(int n, int k, int cap,
                            const std::function<bool(const std::vector<int>&)>& cb);

Partition partition_from_labels(const std::vector<int>& labels);

/// Exhaustive optimum over all k-partitions. Ties are broken toward the
/// lexicographically smallest label string, which is reported first.
OracleResult brute_opt(const WeightedMultigraph& g, int k, const Objective& obj,
                       const OracleOptions& opts = {});

/// Every k-partition achieving the optimum, in enumeration order.
std::vector<Partition> all_optima(const WeightedMultigraph& g, int k,
                                  const Objective& obj, const OracleOptions& opts = {});

}  // namespace kcut
