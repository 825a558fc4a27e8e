#pragma once

#include "rotshed/model.hpp"

namespace rotshed {

// True when w_n = d_n * k_n for every zone, i.e. the relaxation solved the
// original bilinear problem and no repair is needed.
bool is_exact(const ShedPlan& plan);

// Maps a relaxed plan back to a consistent one. Durations are kept; when the
// shed energy of (k, d) falls short of e_sf, every k_n is rescaled by
// e_sf / shed_energy, rounded to nearest (half away from zero) and clamped
// into [0, k_max]. Rounding losses are repaired by incrementing k at the zone
// with the cheapest cost per additional MWh (ties: lowest zone index) until
// the shortfall is covered. Plans already covering e_sf are returned
// unchanged apart from w being recomputed as k*d. Never scales down.
//
// Throws CannotRecoverError when the plan sheds nothing but e_sf > 0, and
// InfeasibleAfterRecoveryError when every zone is at k_max and energy is
// still missing.
ShedPlan recover(const ProblemInstance& instance, const ShedPlan& relaxed_plan);

}  // namespace rotshed
