#pragma once

#include <cstdint>
#include <vector>

#include "kcut/rational.hpp"

namespace kcut {

/// Family over ground set {0..ground_size-1}: for every pair of disjoint
/// X1, X2 with |X1| <= s1, |X2| <= s2 some member contains X1 and misses X2.
struct SeparatingFamily {
  int ground_size = 0;
  int s1 = 0;
  int s2 = 0;
  std::vector<std::vector<int>> members;  // sorted element lists
};

struct SeparatingFamilyOptions {
  std::size_t max_members = 200000;  // cap on the randomized construction
  int exhaustive_limit = 12;         // grounds up to this size take all subsets
};

/// Exhaustive for small grounds, randomized (elements kept with probability
/// s1/(s1+s2)) otherwise; the randomized draw is re-verified and regrown at
/// scales where brute verification is feasible.
SeparatingFamily build_separating_family(int ground_size, int s1, int s2,
                                         std::uint64_t seed,
                                         const SeparatingFamilyOptions& opts = {});

/// Exhaustive check of the separating property (small scales only).
bool verify_separating_family(const SeparatingFamily& family);

}  // namespace kcut
