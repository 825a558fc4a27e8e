#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rotshed/model.hpp"

namespace rotshed {

// Demand per zone and 15-minute slot, MW, zone-major.
struct LoadProfile {
  int num_zones = 0;
  int num_slots = 0;
  std::vector<double> mw;

  double at(int zone, int slot) const { return mw[static_cast<std::size_t>(zone) * num_slots + slot]; }
  double& at(int zone, int slot) { return mw[static_cast<std::size_t>(zone) * num_slots + slot]; }
};

struct ProfileOptions {
  double noise_amplitude = 0.15;  // multiplicative, uniform in [1-a, 1+a]
  double off_peak = 0.7;
  double peak = 1.5;
  double ramp_hours = 1.0;  // linear transition at each window edge
};

// Category day shapes (peak windows: residential 16-20h, industrial 8-18h,
// commercial 9-21h) times seeded multiplicative noise, rescaled so each
// zone's horizon mean equals p_avg exactly. Same (instance, seed, options)
// always reproduces the same bits.
LoadProfile synthesize_profiles(const ProblemInstance& instance, std::uint64_t seed,
                                const ProfileOptions& options = {});

// Per-slot sum over zones, MW.
std::vector<double> total_demand(const LoadProfile& profile);

// 0.25 * sum_t max(total[t] - cap, 0), MWh.
double exceedance_energy_mwh(const std::vector<double>& total_mw, double cap_mw);

// Bisects for the supply cap G whose exceedance energy equals e_sf, to a
// 0.01 MW bracket. e_sf = 0 returns the peak demand (nothing to shed). Throws
// InfeasibleCapError when e_sf exceeds the total demand energy.
double calibrate_cap_mw(const LoadProfile& profile, double e_sf_mwh);

// CSV: header row of zone ids, then one row per slot. Values round-trip.
void save_profile_csv(const LoadProfile& profile, std::ostream& out);
LoadProfile load_profile_csv(std::istream& in);

// CSV of per-slot total demand: "slot,total_mw".
std::string total_demand_csv(const LoadProfile& profile);

}  // namespace rotshed
