#include "rotshed/calendar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace rotshed {

namespace {

constexpr double kCapSlack = 1e-9;

bool overlaps_any(const std::vector<OutageInterval>& intervals, int start, int end) {
  for (const OutageInterval& iv : intervals)
    if (start < iv.end_slot && iv.start_slot < end) return true;
  return false;
}

}  // namespace

std::pair<Calendar, CapReport> place_outages(const ShedPlan& plan, const LoadProfile& profile,
                                             double cap_mw) {
  if (!plan.consistent()) throw InvalidPlanError("calendar placement needs a consistent plan");
  const int n = profile.num_zones;
  const int T = profile.num_slots;
  if (static_cast<int>(plan.size()) != n)
    throw DimensionError("plan size does not match profile zone count");
  if (!(cap_mw > 0.0)) throw Error("cap must be positive");
  for (int z = 0; z < n; ++z) {
    if (plan.k[z] > 0 && plan.k[z] * plan.d_slots[z] > T) {
      char msg[96];
      std::snprintf(msg, sizeof(msg), "zone %d: %lld outages of %lld slots exceed the horizon",
                    z + 1, plan.k[z], plan.d_slots[z]);
      throw ImpossibleCalendarError(msg);
    }
  }

  Calendar cal;
  cal.outages.assign(n, {});
  cal.supplied_mw.assign(T, 0.0);
  std::vector<long long> remaining(plan.k.begin(), plan.k.end());
  std::vector<int> until(n, 0);  // first slot where the zone is back on

  // Forward sweep: start outages whenever the slot runs over the cap,
  // highest-demand zone first.
  for (int t = 0; t < T; ++t) {
    double supplied = 0.0;
    for (int z = 0; z < n; ++z)
      if (until[z] <= t) supplied += profile.at(z, t);
    while (supplied > cap_mw + kCapSlack) {
      int pick = -1;
      double pick_demand = -1.0;
      for (int z = 0; z < n; ++z) {
        if (remaining[z] <= 0 || until[z] > t) continue;
        const int d = static_cast<int>(plan.d_slots[z]);
        if (d <= 0 || t + d > T) continue;
        if (profile.at(z, t) > pick_demand) {
          pick_demand = profile.at(z, t);
          pick = z;
        }
      }
      if (pick < 0) break;
      const int d = static_cast<int>(plan.d_slots[pick]);
      cal.outages[pick].push_back({t, t + d});
      until[pick] = t + d;
      --remaining[pick];
      supplied -= profile.at(pick, t);
    }
    cal.supplied_mw[t] = supplied;
  }

  // Whatever quota is left lands on the highest-supplied stretches, zone by
  // zone, never overlapping the zone's own intervals.
  for (int z = 0; z < n; ++z) {
    const int d = static_cast<int>(plan.d_slots[z]);
    while (remaining[z] > 0) {
      if (d == 0) {
        cal.outages[z].push_back({0, 0});
        --remaining[z];
        continue;
      }
      int best_s = -1;
      double best_sum = -std::numeric_limits<double>::infinity();
      for (int s = 0; s + d <= T; ++s) {
        if (overlaps_any(cal.outages[z], s, s + d)) continue;
        double sum = 0.0;
        for (int t = s; t < s + d; ++t) sum += cal.supplied_mw[t];
        if (sum > best_sum) {
          best_sum = sum;
          best_s = s;
        }
      }
      if (best_s < 0)
        throw ImpossibleCalendarError("remaining outages cannot be placed without overlap");
      for (int t = best_s; t < best_s + d; ++t) cal.supplied_mw[t] -= profile.at(z, t);
      cal.outages[z].push_back({best_s, best_s + d});
      --remaining[z];
    }
    std::sort(cal.outages[z].begin(), cal.outages[z].end(),
              [](const OutageInterval& a, const OutageInterval& b) {
                return a.start_slot < b.start_slot;
              });
  }

  CapReport report;
  report.cap_mw = cap_mw;
  report.demand_mw = total_demand(profile);
  report.supplied_mw = cal.supplied_mw;
  report.residual_mw.assign(T, 0.0);
  for (int t = 0; t < T; ++t) {
    const double r = cal.supplied_mw[t] - cap_mw;
    if (r > kCapSlack) {
      report.residual_mw[t] = r;
      ++report.uncovered_slots;
    }
  }
  report.residual_energy_mwh = 0.0;
  for (double r : report.residual_mw) report.residual_energy_mwh += r;
  report.residual_energy_mwh *= 0.25;
  return {std::move(cal), std::move(report)};
}

ZoneCalendarExport export_zone_calendar(const Calendar& calendar, int zone_id) {
  if (zone_id < 1 || zone_id > static_cast<int>(calendar.outages.size()))
    throw Error("unknown zone id in calendar export");
  const std::vector<OutageInterval>& intervals = calendar.outages[zone_id - 1];
  ZoneCalendarExport out;
  out.csv = "day,start_slot,duration_slots\n";
  char buf[96];
  for (const OutageInterval& iv : intervals) {
    const int day = iv.start_slot / ProblemInstance::slots_per_day;
    const int sod = iv.start_slot % ProblemInstance::slots_per_day;
    const int hh = sod / 4;
    const int mm = (sod % 4) * ProblemInstance::slot_minutes;
    // Intervals crossing midnight stay on their start day, full duration.
    std::snprintf(buf, sizeof(buf), "day %d: %02d:%02d for %d minutes\n", day, hh, mm,
                  iv.length() * ProblemInstance::slot_minutes);
    out.text += buf;
    std::snprintf(buf, sizeof(buf), "%d,%d,%d\n", day, sod, iv.length());
    out.csv += buf;
  }
  return out;
}

std::string calendar_csv(const Calendar& calendar) {
  std::string out = "zone,day,start_slot,duration_slots\n";
  char buf[96];
  for (std::size_t z = 0; z < calendar.outages.size(); ++z) {
    for (const OutageInterval& iv : calendar.outages[z]) {
      const int day = iv.start_slot / ProblemInstance::slots_per_day;
      const int sod = iv.start_slot % ProblemInstance::slots_per_day;
      std::snprintf(buf, sizeof(buf), "%zu,%d,%d,%d\n", z + 1, day, sod, iv.length());
      out += buf;
    }
  }
  return out;
}

std::string cap_report_csv(const CapReport& report) {
  std::string out = "slot,demand_mw,supplied_mw,cap_mw,residual_mw\n";
  char buf[160];
  for (std::size_t t = 0; t < report.supplied_mw.size(); ++t) {
    std::snprintf(buf, sizeof(buf), "%zu,%.6f,%.6f,%.6f,%.6f\n", t, report.demand_mw[t],
                  report.supplied_mw[t], report.cap_mw, report.residual_mw[t]);
    out += buf;
  }
  return out;
}

}  // namespace rotshed
