#pragma once

#include <json.hpp>

#include "kcut/partition.hpp"

namespace kcut {

/// Standard partition report: {"k", "objective", "parts", "per_part_cut",
/// "cost"} plus exact rational strings alongside the numeric fields.
nlohmann::json partition_report(const WeightedMultigraph& g, const Partition& p,
                                const Objective& obj);

std::string objective_name(const Objective& obj);
Objective parse_objective(const std::string& text);

}  // namespace kcut
