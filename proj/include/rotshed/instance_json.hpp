#pragma once

#include <string>

#include "json.hpp"
#include "rotshed/model.hpp"

namespace rotshed {

// Instance schema: top level {zones, e_sf_mwh, c_delta, horizon_days}, zone
// {id, category, p_avg_mw, a1, a2, a3, k_max, d_min_slots, d_max_slots}.
// Unknown keys are rejected. Parsed instances are validated.
ProblemInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const ProblemInstance& instance);

ProblemInstance load_instance(const std::string& path);
void save_instance(const ProblemInstance& instance, const std::string& path);

// Plan schema: {zones: [{id, k, d_slots, w_slots, cost}], total_cost} plus
// whatever summary keys the writer adds on top.
nlohmann::json plan_to_json(const ProblemInstance& instance, const ShedPlan& plan);
ShedPlan plan_from_json(const nlohmann::json& j, const ProblemInstance& instance);

}  // namespace rotshed
