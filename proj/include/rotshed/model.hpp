#pragma once

#include <cstddef>
#include <vector>

#include "rotshed/errors.hpp"

namespace rotshed {

// Interruption cost of one zone: C(k, d) = a1*(d/4)*k + a2*(d/4) + a3*k,
// where d counts 15-minute slots and d/4 converts to hours. a1 weighs total
// unavailability (hours times events), a2 the duration of a single outage,
// a3 the number of outages.
struct CostCoefficients {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

enum class ZoneCategory { Industrial, Residential, Commercial };

const char* to_string(ZoneCategory c);

struct ZoneSpec {
  int id = 0;  // 1-based, consecutive
  ZoneCategory category = ZoneCategory::Residential;
  double p_avg_mw = 0.0;
  CostCoefficients coeffs;
  long long k_max = 0;
  long long d_min_slots = 1;
  long long d_max_slots = 1;
};

struct ProblemInstance {
  std::vector<ZoneSpec> zones;
  double e_sf_mwh = 0.0;  // shortfall energy the plan must shed
  double c_delta = 0.0;   // max cost gap between adjacent zones
  int horizon_days = 30;

  static constexpr int slot_minutes = 15;
  static constexpr int slots_per_day = 96;

  int num_zones() const { return static_cast<int>(zones.size()); }
  int num_slots() const { return horizon_days * slots_per_day; }
  void validate() const;  // throws InvalidInstanceError
};

// Per-zone schedule. k = outage count, d_slots = duration of each outage,
// w_slots = total interrupted slots. w tracks the relaxation's product
// variable and may disagree with k*d for plans coming straight from the
// relaxed solver; consistent() tells the two situations apart.
struct ShedPlan {
  std::vector<long long> k;
  std::vector<long long> d_slots;
  std::vector<long long> w_slots;

  std::size_t size() const { return k.size(); }
  bool consistent() const;
  static ShedPlan zeros(std::size_t n);
};

double zone_cost(const CostCoefficients& c, long long k, long long d_slots);
double total_cost(const ProblemInstance& instance, const ShedPlan& plan);

// 0.25 * sum_n d_n * k_n * p_avg_n, in MWh. Uses the k*d product, not w.
double shed_energy_mwh(const ProblemInstance& instance, const ShedPlan& plan);

struct ZoneBoxSlack {
  long long k_lower = 0;  // k - 0
  long long k_upper = 0;  // k_max - k
  long long d_lower = 0;  // d - d_min
  long long d_upper = 0;  // d_max - d
  bool ok() const { return k_lower >= 0 && k_upper >= 0 && d_lower >= 0 && d_upper >= 0; }
};

// Signed slack per constraint; negative means violated by that amount.
struct FeasibilityReport {
  double shortfall_slack_mwh = 0.0;    // shed_energy - e_sf
  std::vector<ZoneBoxSlack> box;       // one per zone
  std::vector<double> fairness_slack;  // pair n: c_delta - |C_n - C_{n+1}|

  bool shortfall_ok() const { return shortfall_slack_mwh >= 0.0; }
  bool box_ok() const;
  bool fairness_ok() const;
  bool ok() const { return shortfall_ok() && box_ok() && fairness_ok(); }

  std::vector<int> box_violators() const;       // 1-based zone ids
  std::vector<int> fairness_violators() const;  // 1-based pair index n (zones n, n+1)
};

FeasibilityReport check_feasible(const ProblemInstance& instance, const ShedPlan& plan);

}  // namespace rotshed
