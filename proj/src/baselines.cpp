#include "rotshed/baselines.hpp"

#include <cmath>

namespace rotshed {

namespace {
constexpr long long kBaselineSlots = 4;  // both baselines shed in one-hour blocks
}

ShedPlan sequencing_plan(const ProblemInstance& instance) {
  instance.validate();
  const int n = instance.num_zones();
  ShedPlan plan = ShedPlan::zeros(n);
  plan.d_slots.assign(n, kBaselineSlots);

  // One-hour outages handed out round-robin; each sheds p_avg MWh.
  double cumulative = 0.0;
  int zone = 0;
  while (cumulative < instance.e_sf_mwh) {
    ++plan.k[zone];
    cumulative += instance.zones[zone].p_avg_mw;
    zone = (zone + 1) % n;
  }
  for (int i = 0; i < n; ++i) plan.w_slots[i] = plan.k[i] * plan.d_slots[i];
  return plan;
}

ShedPlan equal_power_plan(const ProblemInstance& instance) {
  instance.validate();
  const int n = instance.num_zones();
  ShedPlan plan = ShedPlan::zeros(n);
  plan.d_slots.assign(n, kBaselineSlots);

  const double target = instance.e_sf_mwh / static_cast<double>(n);
  for (int i = 0; i < n; ++i) {
    // Ceiling keeps each zone's share covered whatever the rounding.
    plan.k[i] = static_cast<long long>(std::ceil(target / instance.zones[i].p_avg_mw));
    plan.w_slots[i] = plan.k[i] * plan.d_slots[i];
  }
  return plan;
}

}  // namespace rotshed
