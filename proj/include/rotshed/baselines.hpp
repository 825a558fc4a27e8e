#pragma once

#include "rotshed/model.hpp"

namespace rotshed {

// Rotational baseline: one-hour (4-slot) outages handed out cyclically to
// zones 1, 2, ..., N, 1, 2, ... until the cumulative shed energy reaches
// e_sf. Outage counts across zones differ by at most one. All durations are
// 4 slots; zones never reached keep k = 0.
ShedPlan sequencing_plan(const ProblemInstance& instance);

// Uniform-energy baseline: each zone covers e_sf / N on its own with 4-slot
// outages, k_n = ceil((e_sf / N) / p_avg_n). Ceiling keeps the shortfall
// covered despite rounding.
ShedPlan equal_power_plan(const ProblemInstance& instance);

}  // namespace rotshed
