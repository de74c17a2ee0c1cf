#pragma once

#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

struct MaxFlowResult {
  Rational value;
  std::vector<int> source_side;  // contains s, excludes t; cut_weight equals value
};

/// Exact min s-t cut via shortest augmenting paths (rational arithmetic).
MaxFlowResult max_flow_min_cut(const WeightedMultigraph& g, int s, int t);

/// Global minimum cut: min over t != 0 of the (0,t) min cut.
MaxFlowResult global_min_cut(const WeightedMultigraph& g);

}  // namespace kcut
