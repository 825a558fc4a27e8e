#pragma once

#include "rotshed/model.hpp"

namespace rotshed::testutil {

inline ZoneSpec make_zone(int id, double p_avg, double a1, double a2, double a3,
                          long long k_max, long long d_min, long long d_max,
                          ZoneCategory cat = ZoneCategory::Residential) {
  ZoneSpec z;
  z.id = id;
  z.category = cat;
  z.p_avg_mw = p_avg;
  z.coeffs = {a1, a2, a3};
  z.k_max = k_max;
  z.d_min_slots = d_min;
  z.d_max_slots = d_max;
  return z;
}

inline ProblemInstance make_instance(std::vector<ZoneSpec> zones, double e_sf,
                                     double c_delta = 1e18, int horizon_days = 30) {
  ProblemInstance inst;
  inst.zones = std::move(zones);
  inst.e_sf_mwh = e_sf;
  inst.c_delta = c_delta;
  inst.horizon_days = horizon_days;
  return inst;
}

inline ShedPlan make_plan(std::vector<long long> k, std::vector<long long> d) {
  ShedPlan plan;
  plan.k = std::move(k);
  plan.d_slots = std::move(d);
  plan.w_slots.resize(plan.k.size());
  for (std::size_t i = 0; i < plan.k.size(); ++i) plan.w_slots[i] = plan.k[i] * plan.d_slots[i];
  return plan;
}

}  // namespace rotshed::testutil
