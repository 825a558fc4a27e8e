#pragma once

#include <cstdint>

#include "rotshed/model.hpp"

namespace rotshed {

inline constexpr std::uint64_t kDefaultBenchmarkSeed = 1;

// Reference 30-zone case: zones 1-6 industrial, 7-27 residential, 28-30
// commercial; e_sf = 5e5 MWh over a 30-day horizon, c_delta = 500. Cost
// coefficients and p_avg are drawn uniformly from per-category ranges, so
// the seed pins the exact instance.
ProblemInstance benchmark_instance(std::uint64_t seed = kDefaultBenchmarkSeed);

}  // namespace rotshed
