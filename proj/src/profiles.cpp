#include "rotshed/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace rotshed {

namespace {

// 53-bit uniform in [0, 1); independent of the library's distribution
// internals, so streams replay bit-identically.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

void peak_window(ZoneCategory c, double& start_h, double& end_h) {
  switch (c) {
    case ZoneCategory::Residential: start_h = 16.0; end_h = 20.0; return;
    case ZoneCategory::Industrial: start_h = 8.0; end_h = 18.0; return;
    case ZoneCategory::Commercial: start_h = 9.0; end_h = 21.0; return;
  }
  start_h = 0.0;
  end_h = 0.0;
}

double day_shape(ZoneCategory c, double hour, const ProfileOptions& opt) {
  double ws = 0.0, we = 0.0;
  peak_window(c, ws, we);
  const double rise = opt.peak - opt.off_peak;
  if (hour >= ws && hour < we) return opt.peak;
  if (opt.ramp_hours > 0.0) {
    if (hour >= ws - opt.ramp_hours && hour < ws)
      return opt.off_peak + rise * (hour - (ws - opt.ramp_hours)) / opt.ramp_hours;
    if (hour >= we && hour < we + opt.ramp_hours)
      return opt.peak - rise * (hour - we) / opt.ramp_hours;
  }
  return opt.off_peak;
}

double parse_double(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || end != begin + tok.size())
    throw Error("profile CSV: cannot parse number \"" + tok + "\"");
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string tok;
  std::stringstream ss(line);
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

LoadProfile synthesize_profiles(const ProblemInstance& instance, std::uint64_t seed,
                                const ProfileOptions& options) {
  instance.validate();
  LoadProfile profile;
  profile.num_zones = instance.num_zones();
  profile.num_slots = instance.num_slots();
  profile.mw.assign(static_cast<std::size_t>(profile.num_zones) * profile.num_slots, 0.0);

  std::mt19937_64 rng(seed);
  for (int z = 0; z < profile.num_zones; ++z) {
    const ZoneSpec& zone = instance.zones[z];
    double sum = 0.0;
    for (int t = 0; t < profile.num_slots; ++t) {
      const double hour = static_cast<double>(t % ProblemInstance::slots_per_day) * 0.25;
      const double base = day_shape(zone.category, hour, options);
      const double noise = 1.0 + options.noise_amplitude * (2.0 * uniform01(rng) - 1.0);
      const double v = zone.p_avg_mw * base * noise;
      profile.at(z, t) = v;
      sum += v;
    }
    // Rescale so the horizon mean is p_avg exactly, not just in expectation.
    const double scale = zone.p_avg_mw * static_cast<double>(profile.num_slots) / sum;
    for (int t = 0; t < profile.num_slots; ++t) profile.at(z, t) *= scale;
  }
  return profile;
}

std::vector<double> total_demand(const LoadProfile& profile) {
  std::vector<double> total(profile.num_slots, 0.0);
  for (int z = 0; z < profile.num_zones; ++z)
    for (int t = 0; t < profile.num_slots; ++t) total[t] += profile.at(z, t);
  return total;
}

double exceedance_energy_mwh(const std::vector<double>& total_mw, double cap_mw) {
  double sum = 0.0;
  for (double v : total_mw)
    if (v > cap_mw) sum += v - cap_mw;
  return 0.25 * sum;
}

double calibrate_cap_mw(const LoadProfile& profile, double e_sf_mwh) {
  if (e_sf_mwh < 0.0) throw InfeasibleCapError("shortfall energy must be nonnegative");
  const std::vector<double> total = total_demand(profile);
  if (total.empty()) throw InfeasibleCapError("profile has no slots");
  const double max_td = *std::max_element(total.begin(), total.end());
  if (e_sf_mwh == 0.0) return max_td;
  const double total_energy = exceedance_energy_mwh(total, 0.0);
  if (e_sf_mwh > total_energy)
    throw InfeasibleCapError("shortfall energy exceeds the total demand energy");

  // Exceedance energy decreases monotonically in the cap; bisect to 0.01 MW.
  double lo = 0.0, hi = max_td;
  for (int iter = 0; iter < 200 && hi - lo > 0.01; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (exceedance_energy_mwh(total, mid) > e_sf_mwh)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void save_profile_csv(const LoadProfile& profile, std::ostream& out) {
  for (int z = 0; z < profile.num_zones; ++z) {
    if (z) out << ",";
    out << z + 1;
  }
  out << "\n";
  char buf[40];
  for (int t = 0; t < profile.num_slots; ++t) {
    for (int z = 0; z < profile.num_zones; ++z) {
      if (z) out << ",";
      std::snprintf(buf, sizeof(buf), "%.17g", profile.at(z, t));
      out << buf;
    }
    out << "\n";
  }
}

LoadProfile load_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("profile CSV: empty input");
  const std::vector<std::string> header = split_csv(line);
  const int n = static_cast<int>(header.size());
  if (n == 0) throw Error("profile CSV: header has no zones");
  for (int z = 0; z < n; ++z) {
    if (header[z] != std::to_string(z + 1))
      throw Error("profile CSV: header must list zone ids 1..N in order");
  }

  std::vector<double> values;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> toks = split_csv(line);
    if (static_cast<int>(toks.size()) != n)
      throw Error("profile CSV: row width does not match header");
    for (const std::string& tok : toks) {
      const double v = parse_double(tok);
      if (!(v >= 0.0)) throw Error("profile CSV: demand values must be nonnegative");
      values.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw Error("profile CSV: no data rows");
  if (rows % ProblemInstance::slots_per_day != 0)
    throw Error("profile CSV: row count must be a whole number of days");

  LoadProfile profile;
  profile.num_zones = n;
  profile.num_slots = rows;
  profile.mw.assign(static_cast<std::size_t>(n) * rows, 0.0);
  for (int t = 0; t < rows; ++t)
    for (int z = 0; z < n; ++z) profile.at(z, t) = values[static_cast<std::size_t>(t) * n + z];
  return profile;
}

std::string total_demand_csv(const LoadProfile& profile) {
  const std::vector<double> total = total_demand(profile);
  std::string out = "slot,total_mw\n";
  char buf[64];
  for (std::size_t t = 0; t < total.size(); ++t) {
    std::snprintf(buf, sizeof(buf), "%zu,%.6f\n", t, total[t]);
    out += buf;
  }
  return out;
}

}  // namespace rotshed
