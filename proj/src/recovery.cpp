#include "rotshed/recovery.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace rotshed {

bool is_exact(const ShedPlan& plan) {
  return plan.consistent();
}

ShedPlan recover(const ProblemInstance& instance, const ShedPlan& relaxed_plan) {
  const std::size_t n = instance.zones.size();
  if (relaxed_plan.k.size() != n || relaxed_plan.d_slots.size() != n ||
      relaxed_plan.w_slots.size() != n)
    throw DimensionError("plan size does not match instance zone count");

  ShedPlan out = ShedPlan::zeros(n);
  out.d_slots = relaxed_plan.d_slots;  // durations survive recovery untouched
  out.k = relaxed_plan.k;

  const double shed = shed_energy_mwh(instance, out);
  if (shed >= instance.e_sf_mwh) {
    for (std::size_t i = 0; i < n; ++i) out.w_slots[i] = out.k[i] * out.d_slots[i];
    return out;
  }
  if (shed <= 0.0)
    throw CannotRecoverError("relaxed plan sheds no energy, nothing to rescale");

  // Scale every count by e_sf / shed (never below 1 here), round half away
  // from zero, clamp into the box.
  const double factor = instance.e_sf_mwh / shed;
  for (std::size_t i = 0; i < n; ++i) {
    long long k = std::llround(factor * static_cast<double>(relaxed_plan.k[i]));
    if (k < 0) k = 0;
    if (k > instance.zones[i].k_max) k = instance.zones[i].k_max;
    out.k[i] = k;
  }

  // Rounding can undershoot; add outages one at a time at the zone with the
  // cheapest cost per recovered MWh until the target is met. The covered
  // energy is recomputed from the plan each round so the exit condition
  // matches what any later feasibility check will see.
  for (;;) {
    const double current = shed_energy_mwh(instance, out);
    if (current >= instance.e_sf_mwh) break;
    int best = -1;
    double best_rate = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (out.k[i] >= instance.zones[i].k_max) continue;
      if (out.d_slots[i] <= 0) continue;
      const double d = static_cast<double>(out.d_slots[i]);
      const double gain_mwh = 0.25 * d * instance.zones[i].p_avg_mw;
      const double step_cost = 0.25 * instance.zones[i].coeffs.a1 * d + instance.zones[i].coeffs.a3;
      const double rate = step_cost / gain_mwh;
      if (rate < best_rate) {
        best_rate = rate;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      const double residual = instance.e_sf_mwh - current;
      char msg[120];
      std::snprintf(msg, sizeof(msg),
                    "outage-count headroom exhausted with %.6f MWh still uncovered", residual);
      throw InfeasibleAfterRecoveryError(msg, residual);
    }
    ++out.k[best];
  }

  for (std::size_t i = 0; i < n; ++i) out.w_slots[i] = out.k[i] * out.d_slots[i];
  return out;
}

}  // namespace rotshed
