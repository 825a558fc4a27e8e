#include "rotshed/model.hpp"

#include <cmath>
#include <cstdio>

namespace rotshed {

namespace {

std::string zone_msg(int id, const char* what) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "zone %d: %s", id, what);
  return buf;
}

void require_same_size(const ProblemInstance& instance, const ShedPlan& plan) {
  const std::size_t n = instance.zones.size();
  if (plan.k.size() != n || plan.d_slots.size() != n || plan.w_slots.size() != n)
    throw DimensionError("plan size does not match instance zone count");
}

}  // namespace

const char* to_string(ZoneCategory c) {
  switch (c) {
    case ZoneCategory::Industrial: return "industrial";
    case ZoneCategory::Residential: return "residential";
    case ZoneCategory::Commercial: return "commercial";
  }
  return "?";
}

void ProblemInstance::validate() const {
  if (zones.empty()) throw InvalidInstanceError("instance has no zones");
  if (!(e_sf_mwh >= 0.0)) throw InvalidInstanceError("e_sf_mwh must be nonnegative");
  if (!(c_delta >= 0.0)) throw InvalidInstanceError("c_delta must be nonnegative");
  if (horizon_days < 1) throw InvalidInstanceError("horizon_days must be at least 1");
  for (std::size_t i = 0; i < zones.size(); ++i) {
    const ZoneSpec& z = zones[i];
    if (z.id != static_cast<int>(i) + 1)
      throw InvalidInstanceError("zone ids must be 1..N in order");
    if (!(z.p_avg_mw > 0.0)) throw InvalidInstanceError(zone_msg(z.id, "p_avg_mw must be positive"));
    if (!(z.coeffs.a1 >= 0.0) || !(z.coeffs.a2 >= 0.0) || !(z.coeffs.a3 >= 0.0))
      throw InvalidInstanceError(zone_msg(z.id, "cost coefficients must be nonnegative"));
    if (z.k_max < 0) throw InvalidInstanceError(zone_msg(z.id, "k_max must be nonnegative"));
    if (z.d_min_slots < 1) throw InvalidInstanceError(zone_msg(z.id, "d_min_slots must be at least 1"));
    if (z.d_min_slots > z.d_max_slots)
      throw InvalidInstanceError(zone_msg(z.id, "d_min_slots exceeds d_max_slots"));
  }
}

bool ShedPlan::consistent() const {
  if (d_slots.size() != k.size() || w_slots.size() != k.size()) return false;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (w_slots[i] != k[i] * d_slots[i]) return false;
  return true;
}

ShedPlan ShedPlan::zeros(std::size_t n) {
  ShedPlan p;
  p.k.assign(n, 0);
  p.d_slots.assign(n, 0);
  p.w_slots.assign(n, 0);
  return p;
}

double zone_cost(const CostCoefficients& c, long long k, long long d_slots) {
  const double kd = static_cast<double>(d_slots) * static_cast<double>(k);
  return 0.25 * c.a1 * kd + 0.25 * c.a2 * static_cast<double>(d_slots) +
         c.a3 * static_cast<double>(k);
}

double total_cost(const ProblemInstance& instance, const ShedPlan& plan) {
  require_same_size(instance, plan);
  double total = 0.0;
  for (std::size_t i = 0; i < instance.zones.size(); ++i)
    total += zone_cost(instance.zones[i].coeffs, plan.k[i], plan.d_slots[i]);
  return total;
}

double shed_energy_mwh(const ProblemInstance& instance, const ShedPlan& plan) {
  require_same_size(instance, plan);
  double sum = 0.0;
  for (std::size_t i = 0; i < instance.zones.size(); ++i)
    sum += static_cast<double>(plan.d_slots[i]) * static_cast<double>(plan.k[i]) *
           instance.zones[i].p_avg_mw;
  return 0.25 * sum;
}

bool FeasibilityReport::box_ok() const {
  for (const ZoneBoxSlack& s : box)
    if (!s.ok()) return false;
  return true;
}

bool FeasibilityReport::fairness_ok() const {
  for (double s : fairness_slack)
    if (s < 0.0) return false;
  return true;
}

std::vector<int> FeasibilityReport::box_violators() const {
  std::vector<int> ids;
  for (std::size_t i = 0; i < box.size(); ++i)
    if (!box[i].ok()) ids.push_back(static_cast<int>(i) + 1);
  return ids;
}

std::vector<int> FeasibilityReport::fairness_violators() const {
  std::vector<int> pairs;
  for (std::size_t i = 0; i < fairness_slack.size(); ++i)
    if (fairness_slack[i] < 0.0) pairs.push_back(static_cast<int>(i) + 1);
  return pairs;
}

FeasibilityReport check_feasible(const ProblemInstance& instance, const ShedPlan& plan) {
  require_same_size(instance, plan);
  FeasibilityReport report;
  report.shortfall_slack_mwh = shed_energy_mwh(instance, plan) - instance.e_sf_mwh;
  report.box.reserve(instance.zones.size());
  for (std::size_t i = 0; i < instance.zones.size(); ++i) {
    const ZoneSpec& z = instance.zones[i];
    report.box.push_back({plan.k[i], z.k_max - plan.k[i], plan.d_slots[i] - z.d_min_slots,
                          z.d_max_slots - plan.d_slots[i]});
  }
  // Fairness is an open chain over adjacent ids; no wraparound pair.
  for (std::size_t i = 0; i + 1 < instance.zones.size(); ++i) {
    const double gap = std::abs(zone_cost(instance.zones[i].coeffs, plan.k[i], plan.d_slots[i]) -
                                zone_cost(instance.zones[i + 1].coeffs, plan.k[i + 1],
                                          plan.d_slots[i + 1]));
    report.fairness_slack.push_back(instance.c_delta - gap);
  }
  return report;
}

}  // namespace rotshed
