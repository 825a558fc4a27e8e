#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rotshed/model.hpp"
#include "rotshed/profiles.hpp"

namespace rotshed {

struct OutageInterval {
  int start_slot = 0;
  int end_slot = 0;  // exclusive
  int length() const { return end_slot - start_slot; }
};

struct Calendar {
  std::vector<std::vector<OutageInterval>> outages;  // per zone, sorted by start
  std::vector<double> supplied_mw;                   // per slot, after shedding
};

struct CapReport {
  double cap_mw = 0.0;
  std::vector<double> demand_mw;    // per slot, total
  std::vector<double> supplied_mw;  // per slot
  std::vector<double> residual_mw;  // max(supplied - cap, 0)
  double residual_energy_mwh = 0.0;
  int uncovered_slots = 0;  // slots where supplied power still exceeds the cap
};

// Places each zone's k_n outages of d_n slots on the horizon. Forward sweep:
// whenever supplied power exceeds the cap, outages are started greedily at
// the zones with the highest current demand (ties: lowest id) until the slot
// is at or under the cap or no zone qualifies. Quota left over after the
// sweep is appended at the highest-supplied stretches, keeping each zone's
// intervals disjoint. Every zone ends up with exactly k_n intervals of d_n
// slots. Throws InvalidPlanError on an inconsistent plan, DimensionError on
// mismatched shapes, ImpossibleCalendarError when the quota cannot fit.
std::pair<Calendar, CapReport> place_outages(const ShedPlan& plan, const LoadProfile& profile,
                                             double cap_mw);

struct ZoneCalendarExport {
  std::string text;  // per-day "HH:MM for M minutes" lines
  std::string csv;   // day,start_slot,duration_slots (start within the day)
};

// zone_id is 1-based. Intervals crossing midnight belong to their start day.
ZoneCalendarExport export_zone_calendar(const Calendar& calendar, int zone_id);

// Whole-calendar CSV: zone,day,start_slot,duration_slots.
std::string calendar_csv(const Calendar& calendar);

// Per-slot CSV: slot,demand_mw,supplied_mw,cap_mw,residual_mw.
std::string cap_report_csv(const CapReport& report);

}  // namespace rotshed
