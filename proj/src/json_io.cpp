#include "kcut/json_io.hpp"

namespace kcut {

std::string objective_name(const Objective& obj) {
  switch (obj.kind) {
    case Objective::Kind::minmax:
      return "minmax";
    case Objective::Kind::minsum:
      return "minsum";
    case Objective::Kind::lp:
      return "lp:" + rat_to_string(obj.p);
  }
  return "minmax";
}

Objective parse_objective(const std::string& text) {
  if (text == "minmax") return Objective::minmax();
  if (text == "minsum") return Objective::minsum();
  if (text.rfind("lp:", 0) == 0) return Objective::lp(parse_rational(text.substr(3)));
  throw InputError("unknown objective '" + text + "' (minmax|minsum|lp:<p>)");
}

nlohmann::json partition_report(const WeightedMultigraph& g, const Partition& p,
                                const Objective& obj) {
  auto cuts = per_part_cuts(g, p.parts);
  nlohmann::json out;
  out["k"] = p.parts.size();
  out["objective"] = objective_name(obj);
  out["parts"] = p.parts;
  nlohmann::json cut_values = nlohmann::json::array();
  nlohmann::json cut_exact = nlohmann::json::array();
  for (const auto& c : cuts) {
    cut_values.push_back(rat_to_double(c));
    cut_exact.push_back(rat_to_string(c));
  }
  out["per_part_cut"] = cut_values;
  out["per_part_cut_exact"] = cut_exact;
  out["cost"] = cost_numeric(cuts, obj);
  if (obj.kind != Objective::Kind::lp)
    out["cost_exact"] = rat_to_string(cost_power(cuts, obj));
  else if (obj.integral_p())
    out["cost_power_exact"] = rat_to_string(cost_power(cuts, obj));
  return out;
}

}  // namespace kcut
