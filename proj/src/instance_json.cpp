#include "rotshed/instance_json.hpp"

#include <fstream>
#include <set>

namespace rotshed {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw JsonError(std::string("unknown key \"") + it.key() + "\" in " + where);
}

const json& require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw JsonError(std::string("missing key \"") + key + "\" in " + where);
  return *it;
}

double number(const json& obj, const char* key, const char* where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) throw JsonError(std::string("key \"") + key + "\" must be a number");
  return v.get<double>();
}

long long integer(const json& obj, const char* key, const char* where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer())
    throw JsonError(std::string("key \"") + key + "\" must be an integer");
  return v.get<long long>();
}

ZoneCategory category_from_string(const std::string& s) {
  if (s == "industrial") return ZoneCategory::Industrial;
  if (s == "residential") return ZoneCategory::Residential;
  if (s == "commercial") return ZoneCategory::Commercial;
  throw JsonError("unknown zone category \"" + s + "\"");
}

}  // namespace

ProblemInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw JsonError("instance document must be a JSON object");
  reject_unknown_keys(j, {"zones", "e_sf_mwh", "c_delta", "horizon_days"}, "instance");
  ProblemInstance instance;
  instance.e_sf_mwh = number(j, "e_sf_mwh", "instance");
  instance.c_delta = number(j, "c_delta", "instance");
  instance.horizon_days = static_cast<int>(integer(j, "horizon_days", "instance"));
  const json& zones = require(j, "zones", "instance");
  if (!zones.is_array()) throw JsonError("\"zones\" must be an array");
  for (const json& zj : zones) {
    if (!zj.is_object()) throw JsonError("zone entries must be objects");
    reject_unknown_keys(zj,
                        {"id", "category", "p_avg_mw", "a1", "a2", "a3", "k_max",
                         "d_min_slots", "d_max_slots"},
                        "zone");
    ZoneSpec z;
    z.id = static_cast<int>(integer(zj, "id", "zone"));
    const json& cat = require(zj, "category", "zone");
    if (!cat.is_string()) throw JsonError("zone category must be a string");
    z.category = category_from_string(cat.get<std::string>());
    z.p_avg_mw = number(zj, "p_avg_mw", "zone");
    z.coeffs.a1 = number(zj, "a1", "zone");
    z.coeffs.a2 = number(zj, "a2", "zone");
    z.coeffs.a3 = number(zj, "a3", "zone");
    z.k_max = integer(zj, "k_max", "zone");
    z.d_min_slots = integer(zj, "d_min_slots", "zone");
    z.d_max_slots = integer(zj, "d_max_slots", "zone");
    instance.zones.push_back(z);
  }
  instance.validate();
  return instance;
}

json instance_to_json(const ProblemInstance& instance) {
  json zones = json::array();
  for (const ZoneSpec& z : instance.zones) {
    zones.push_back({{"id", z.id},
                     {"category", to_string(z.category)},
                     {"p_avg_mw", z.p_avg_mw},
                     {"a1", z.coeffs.a1},
                     {"a2", z.coeffs.a2},
                     {"a3", z.coeffs.a3},
                     {"k_max", z.k_max},
                     {"d_min_slots", z.d_min_slots},
                     {"d_max_slots", z.d_max_slots}});
  }
  return {{"zones", zones},
          {"e_sf_mwh", instance.e_sf_mwh},
          {"c_delta", instance.c_delta},
          {"horizon_days", instance.horizon_days}};
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw JsonError(std::string("instance parse error: ") + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const ProblemInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file: " + path);
  out << instance_to_json(instance).dump(2) << "\n";
}

json plan_to_json(const ProblemInstance& instance, const ShedPlan& plan) {
  if (plan.size() != instance.zones.size())
    throw DimensionError("plan size does not match instance zone count");
  json zones = json::array();
  for (std::size_t i = 0; i < plan.size(); ++i) {
    zones.push_back({{"id", instance.zones[i].id},
                     {"k", plan.k[i]},
                     {"d_slots", plan.d_slots[i]},
                     {"w_slots", plan.w_slots[i]},
                     {"cost", zone_cost(instance.zones[i].coeffs, plan.k[i], plan.d_slots[i])}});
  }
  return {{"zones", zones}, {"total_cost", total_cost(instance, plan)}};
}

ShedPlan plan_from_json(const json& j, const ProblemInstance& instance) {
  if (!j.is_object()) throw JsonError("plan document must be a JSON object");
  const json& zones = require(j, "zones", "plan");
  if (!zones.is_array()) throw JsonError("plan \"zones\" must be an array");
  if (zones.size() != instance.zones.size())
    throw DimensionError("plan zone count does not match instance");
  ShedPlan plan = ShedPlan::zeros(zones.size());
  for (std::size_t i = 0; i < zones.size(); ++i) {
    const json& zj = zones[i];
    if (static_cast<int>(integer(zj, "id", "plan zone")) != instance.zones[i].id)
      throw JsonError("plan zone ids must match the instance order");
    plan.k[i] = integer(zj, "k", "plan zone");
    plan.d_slots[i] = integer(zj, "d_slots", "plan zone");
    plan.w_slots[i] = integer(zj, "w_slots", "plan zone");
  }
  return plan;
}

}  // namespace rotshed
