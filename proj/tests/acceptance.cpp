// Acceptance harness: exercises the solver stack end to end and prints one
// PASS/FAIL line per criterion. argv[1] names the CLI binary; the rerun
// determinism criterion shells out to it.
//
// The 30-zone reference case does not close its branch-and-bound tree within
// the default node budget (see README, "Scale"), so the harness reports the
// proof criterion with the measured bound and gap instead of hiding behind a
// smaller instance, and evaluates the plan-quality criteria on the best
// incumbent the budgeted search returns.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rotshed/baselines.hpp"
#include "rotshed/benchmark.hpp"
#include "rotshed/calendar.hpp"
#include "rotshed/errors.hpp"
#include "rotshed/ilp.hpp"
#include "rotshed/instance_json.hpp"
#include "rotshed/model.hpp"
#include "rotshed/oracle.hpp"
#include "rotshed/profiles.hpp"
#include "rotshed/recovery.hpp"
#include "rotshed/relax.hpp"

using namespace rotshed;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const char* label, bool ok, const std::string& detail) {
  if (!ok) ++g_failures;
  std::printf("%s criterion %d: %s%s%s%s\n", ok ? "PASS" : "FAIL", number, label,
              detail.empty() ? "" : " (", detail.c_str(), detail.empty() ? "" : ")");
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[320];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// --- sampled small-instance suite -----------------------------------------

// Integer coefficients and a shortfall snapped to a quarter-MWh keep every
// activity and cost an exact multiple of 0.25 in double precision, so the
// solver and the enumeration oracle can be compared bit for bit.
ProblemInstance sample_small_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };
  ProblemInstance inst;
  inst.horizon_days = 1;
  const int n = static_cast<int>(draw(1, 3));
  while (true) {
    inst.zones.clear();
    long long product = 1;
    for (int z = 0; z < n; ++z) {
      ZoneSpec zone;
      zone.id = z + 1;
      zone.k_max = draw(0, 6);
      zone.d_min_slots = draw(1, 4);
      zone.d_max_slots = draw(zone.d_min_slots, 6);
      zone.coeffs.a1 = static_cast<double>(draw(0, 8));
      zone.coeffs.a2 = static_cast<double>(draw(0, 8));
      zone.coeffs.a3 = static_cast<double>(draw(0, 8));
      zone.p_avg_mw = static_cast<double>(draw(50, 550));
      product *= (zone.k_max + 1) * (zone.d_max_slots - zone.d_min_slots + 1) *
                 (zone.k_max * zone.d_max_slots + 1);
      inst.zones.push_back(zone);
    }
    if (product <= 300000) break;  // keeps the enumeration oracle fast
  }
  double max_shed = 0.0;
  for (const ZoneSpec& z : inst.zones)
    max_shed += static_cast<double>(z.k_max * z.d_max_slots) * z.p_avg_mw;
  max_shed *= 0.25;
  const double fractions[] = {0.0, 0.3, 0.6, 0.9, 1.0, 1.2};
  const double f = fractions[draw(0, 5)];
  inst.e_sf_mwh = static_cast<double>(llround(4.0 * f * max_shed)) / 4.0;
  const double deltas[] = {0.0, 2.0, 10.0, 100.0, 1e6};
  inst.c_delta = deltas[draw(0, 4)];
  inst.validate();
  return inst;
}

struct SampledCase {
  std::uint64_t seed = 0;
  ProblemInstance instance;
  Relaxation relax;
  bool solver_ok = false;
  std::string solver_error;
  IlpSolution solver;
  IlpSolution oracle;
};

std::vector<SampledCase> run_sampled_suite(double* suite_seconds) {
  std::vector<SampledCase> cases;
  cases.reserve(100);
  double total = 0.0;
  for (int i = 0; i < 100; ++i) {
    SampledCase c;
    c.seed = 9000 + i;
    c.instance = sample_small_instance(c.seed);
    c.relax = build_relaxation(c.instance);
    const auto t0 = Clock::now();
    try {
      c.solver = solve_ilp(c.relax.program);
      c.solver_ok = true;
    } catch (const Error& e) {
      c.solver_error = e.what();
    }
    c.oracle = brute_force_ilp(c.relax.program);
    total += seconds_since(t0);
    cases.push_back(std::move(c));
  }
  *suite_seconds = total;
  return cases;
}

void criterion_1(const std::vector<SampledCase>& cases, double suite_seconds) {
  int optimal = 0;
  int infeasible = 0;
  int mismatches = 0;
  std::string first;
  for (const SampledCase& c : cases) {
    if (!c.solver_ok) {
      ++mismatches;
      if (first.empty()) first = fmt("seed %llu: %s", (unsigned long long)c.seed, c.solver_error.c_str());
      continue;
    }
    if (c.solver.status != c.oracle.status) {
      ++mismatches;
      if (first.empty()) first = fmt("seed %llu: status differs", (unsigned long long)c.seed);
      continue;
    }
    if (c.solver.status == IlpStatus::Optimal) {
      ++optimal;
      if (c.solver.objective != c.oracle.objective) {
        ++mismatches;
        if (first.empty())
          first = fmt("seed %llu: %.17g vs %.17g", (unsigned long long)c.seed, c.solver.objective,
                      c.oracle.objective);
      }
    } else {
      ++infeasible;
    }
  }
  const bool ok = mismatches == 0 && suite_seconds < 10.0;
  report(1, "solver agrees exactly with enumeration on 100 sampled instances", ok,
         ok ? fmt("%d optimal, %d infeasible, %.2f s", optimal, infeasible, suite_seconds)
            : (first.empty() ? fmt("%.2f s over budget", suite_seconds) : first));
}

void criterion_2(const std::vector<SampledCase>& cases) {
  int compared = 0;
  int violations = 0;
  std::string first;
  for (const SampledCase& c : cases) {
    const auto orig = brute_force_original(c.instance);
    if (!orig) continue;
    ++compared;
    const bool ok = c.solver_ok && c.solver.status == IlpStatus::Optimal &&
                    c.solver.objective <= orig->cost;
    if (!ok) {
      ++violations;
      if (first.empty())
        first = fmt("seed %llu: relaxed %.17g vs bilinear %.17g", (unsigned long long)c.seed,
                    c.solver_ok ? c.solver.objective : 0.0, orig->cost);
    }
  }
  report(2, "relaxed optimum never exceeds the bilinear optimum", violations == 0,
         violations == 0 ? fmt("%d comparable instances", compared) : first);
}

// --- 30-zone reference case -------------------------------------------------

// One budgeted search over the reference relaxation. When the tree closes the
// result is a proven optimum; when the budget runs out first, the best
// incumbent and the proven open bound come back through the resource error
// and the downstream criteria work with those, saying so in their output.
struct ReferenceRun {
  ProblemInstance instance;
  Relaxation relax;
  long long budget = 0;
  bool proven = false;
  bool have_plan = false;
  std::string error;        // set only when not even an incumbent exists
  double objective = 0.0;   // proven optimum, or best incumbent objective
  double best_bound = 0.0;  // proven lower bound on the relaxed optimum
  long long nodes = 0;
  double solve_seconds = 0.0;
  double pipeline_seconds = 0.0;  // relaxation + search + recovery + baselines
  std::vector<long long> x;
  bool recovered_ok = false;
  ShedPlan recovered;
  double rec_cost = 0.0;
  double seq_cost = 0.0;
  double eq_cost = 0.0;
};

ReferenceRun run_reference_case(long long node_budget) {
  ReferenceRun r;
  r.budget = node_budget;
  const auto t0 = Clock::now();
  r.instance = benchmark_instance();
  try {
    r.relax = build_relaxation(r.instance);
    IlpOptions opt;
    opt.node_budget = node_budget;
    const auto ts = Clock::now();
    try {
      const IlpSolution sol = solve_ilp(r.relax.program, opt);
      r.solve_seconds = seconds_since(ts);
      if (sol.status == IlpStatus::Optimal) {
        r.proven = true;
        r.have_plan = true;
        r.objective = sol.objective;
        r.best_bound = sol.objective;
        r.nodes = sol.node_count;
        r.x = sol.x;
      } else {
        r.error = "relaxation reported infeasible";
      }
    } catch (const ResourceLimitError& e) {
      r.solve_seconds = seconds_since(ts);
      r.nodes = e.nodes;
      r.best_bound = e.best_bound;
      if (e.has_incumbent) {
        r.have_plan = true;
        r.objective = e.incumbent_objective;
        r.x = e.incumbent_x;
      } else {
        r.error = e.what();
      }
    }
    if (r.have_plan) {
      r.recovered = recover(r.instance, plan_from_point(r.relax.layout, r.x));
      r.recovered_ok = true;
      r.rec_cost = total_cost(r.instance, r.recovered);
      r.seq_cost = total_cost(r.instance, sequencing_plan(r.instance));
      r.eq_cost = total_cost(r.instance, equal_power_plan(r.instance));
    }
  } catch (const std::exception& e) {
    if (r.error.empty()) r.error = e.what();
  }
  r.pipeline_seconds = seconds_since(t0);
  return r;
}

std::string plan_provenance(const ReferenceRun& r) {
  if (r.proven) return fmt("proven optimum, %lld nodes", (long long)r.nodes);
  return fmt("best incumbent at %lld nodes, bound %.0f", (long long)r.nodes, r.best_bound);
}

void criterion_3(const std::vector<SampledCase>& cases, const ReferenceRun& ref) {
  int checked = 0;
  int skipped = 0;
  int violations = 0;
  std::string first;
  // floor: largest value the recovered cost provably must not undercut. For a
  // proven optimum that is the relaxed objective itself; for the budgeted
  // reference case only the proven open bound is available.
  auto check_one = [&](const ProblemInstance& inst, const ShedPlan& rec, double floor,
                       const std::string& tag) {
    ++checked;
    const FeasibilityReport rep = check_feasible(inst, rec);
    const double cost = total_cost(inst, rec);
    const double slack = 1e-9 * (1.0 + std::fabs(floor));
    if (!(rec.consistent() && rep.box_ok() && rep.shortfall_ok() && cost >= floor - slack)) {
      ++violations;
      if (first.empty())
        first = fmt("%s: consistent=%d box=%d shortfall=%d cost %.17g vs floor %.17g", tag.c_str(),
                    (int)rec.consistent(), (int)rep.box_ok(), (int)rep.shortfall_ok(), cost, floor);
    }
  };
  for (const SampledCase& c : cases) {
    if (!(c.solver_ok && c.solver.status == IlpStatus::Optimal)) continue;
    ShedPlan rec;
    try {
      rec = recover(c.instance, plan_from_point(c.relax.layout, c.solver.x));
    } catch (const CannotRecoverError&) {
      ++skipped;
      continue;
    } catch (const InfeasibleAfterRecoveryError&) {
      ++skipped;
      continue;
    }
    check_one(c.instance, rec, c.solver.objective, fmt("seed %llu", (unsigned long long)c.seed));
  }
  std::string ref_note = "reference case missing";
  if (ref.recovered_ok) {
    check_one(ref.instance, ref.recovered, ref.best_bound,
              fmt("reference case (%s)", plan_provenance(ref).c_str()));
    ref_note = ref.proven ? "reference floor = relaxed optimum"
                          : fmt("reference floor = proven bound %.0f", ref.best_bound);
  }
  const bool ok = violations == 0 && checked > 0 && ref.recovered_ok;
  report(3, "recovered plans stay consistent, boxed, covering, and at or above the bound", ok,
         violations == 0 ? fmt("%d plans checked, %d skipped; %s", checked, skipped,
                               ref_note.c_str())
                         : first);
}

void criterion_4(const ReferenceRun& timed) {
  const char* label = "reference case beats both baselines by at least 15%";
  if (!timed.recovered_ok) {
    report(4, label, false, timed.error.empty() ? "recovery failed" : timed.error);
    return;
  }
  const double seq_red = (timed.seq_cost - timed.rec_cost) / timed.seq_cost * 100.0;
  const double eq_red = (timed.eq_cost - timed.rec_cost) / timed.eq_cost * 100.0;
  const bool ok = timed.rec_cost < timed.seq_cost && timed.rec_cost < timed.eq_cost &&
                  seq_red >= 15.0 && eq_red >= 15.0 && timed.pipeline_seconds < 5.0;
  report(4, label, ok,
         fmt("cost %.0f (%s), -%.1f%% vs sequencing, -%.1f%% vs equal-power, %.2f s",
             timed.rec_cost, plan_provenance(timed).c_str(), seq_red, eq_red,
             timed.pipeline_seconds));
}

// Two zones with continuously drawn coefficients: no pair of distinct integer
// points shares a cost, so a zero fairness gap admits no integer point at all
// while a loose gap stays solvable. The enumeration oracle proves both sides.
ProblemInstance tiny_fairness_instance(double c_delta) {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto in = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
  ProblemInstance inst;
  inst.horizon_days = 1;
  inst.e_sf_mwh = 300.0;
  inst.c_delta = c_delta;
  ZoneSpec a;
  a.id = 1;
  a.category = ZoneCategory::Industrial;
  a.p_avg_mw = 400.0;
  a.coeffs = {in(50.0, 150.0), in(20.0, 70.0), in(70.0, 120.0)};
  a.k_max = 3;
  a.d_min_slots = 1;
  a.d_max_slots = 2;
  ZoneSpec b;
  b.id = 2;
  b.category = ZoneCategory::Commercial;
  b.p_avg_mw = 600.0;
  b.coeffs = {in(500.0, 600.0), in(70.0, 120.0), in(70.0, 120.0)};
  b.k_max = 2;
  b.d_min_slots = 1;
  b.d_max_slots = 2;
  inst.zones = {a, b};
  inst.validate();
  return inst;
}

void criterion_5(const ReferenceRun& ref) {
  const char* label = "tightening the fairness gap raises the optimum and can kill feasibility";
  try {
    // Ordering leg, by certificates that need no finished tree: the root
    // relaxation at c_delta=100 bounds that optimum from below, and the best
    // known plan at c_delta=500 bounds that optimum from above. When the
    // first exceeds the second the two optima are ordered.
    bool leg_a = false;
    std::string note;
    ProblemInstance tight = ref.instance;
    tight.c_delta = 100.0;
    const LpSolution tight_root = solve_lp(build_relaxation(tight).program);
    if (tight_root.status != LpStatus::Optimal) {
      note = "c_delta=100 root relaxation infeasible";
      leg_a = ref.have_plan;  // infeasible beats any finite optimum
    } else if (ref.proven) {
      leg_a = tight_root.objective >= ref.objective - 1e-6 * (1.0 + std::fabs(ref.objective));
      note = fmt("root bound %.0f at c_delta=100 vs optimum %.0f at 500", tight_root.objective,
                 ref.objective);
    } else if (ref.have_plan) {
      leg_a = tight_root.objective >= ref.objective;
      note = fmt("root bound %.0f at c_delta=100 vs plan %.0f at 500", tight_root.objective,
                 ref.objective);
    } else {
      note = "no plan at c_delta=500 to compare against";
    }

    const ProblemInstance closed = tiny_fairness_instance(0.0);
    const Relaxation closed_relax = build_relaxation(closed);
    const IlpSolution closed_oracle = brute_force_ilp(closed_relax.program);
    const IlpSolution closed_solver = solve_ilp(closed_relax.program);
    const IlpSolution open_solver = solve_ilp(build_relaxation(tiny_fairness_instance(1e6)).program);
    const bool leg_b = closed_oracle.status == IlpStatus::Infeasible &&
                       closed_solver.status == IlpStatus::Infeasible &&
                       open_solver.status == IlpStatus::Optimal;

    report(5, label, leg_a && leg_b,
           fmt("%s; zero-gap case infeasible by solver and enumeration: %s", note.c_str(),
               leg_b ? "yes" : "no"));
  } catch (const std::exception& e) {
    report(5, label, false, e.what());
  }
}

void criterion_6() {
  const char* label = "product envelopes hold at every integer box point of all three categories";
  try {
    struct CategoryBox {
      ZoneCategory cat;
      long long k_max, d_min, d_max;
    };
    const CategoryBox boxes[] = {{ZoneCategory::Industrial, 50, 8, 16},
                                 {ZoneCategory::Residential, 200, 2, 8},
                                 {ZoneCategory::Commercial, 20, 1, 2}};
    long long points = 0;
    long long violations = 0;
    for (const CategoryBox& box : boxes) {
      ProblemInstance inst;
      inst.horizon_days = 1;
      inst.e_sf_mwh = 0.0;
      inst.c_delta = 1e9;
      ZoneSpec z;
      z.id = 1;
      z.category = box.cat;
      z.p_avg_mw = 500.0;
      z.coeffs = {1.0, 1.0, 1.0};
      z.k_max = box.k_max;
      z.d_min_slots = box.d_min;
      z.d_max_slots = box.d_max;
      inst.zones = {z};
      for (const bool classical : {false, true}) {
        RelaxOptions opt;
        opt.classical_upper_envelope = classical;
        const Relaxation relax = build_relaxation(inst, opt);
        std::vector<const LinearConstraint*> rows;
        for (const LinearConstraint& c : relax.program.constraints)
          if (c.name.rfind("env_", 0) == 0) rows.push_back(&c);
        for (long long k = 0; k <= box.k_max; ++k) {
          for (long long d = box.d_min; d <= box.d_max; ++d) {
            if (!classical) ++points;
            const long long x[3] = {k, d, k * d};
            for (const LinearConstraint* row : rows) {
              long long activity = 0;
              for (int j = 0; j < 3; ++j) {
                const long long cj = llround(row->coeffs[j]);
                if (static_cast<double>(cj) != row->coeffs[j]) ++violations;
                activity += cj * x[j];
              }
              const long long rhs = llround(row->rhs);
              if (static_cast<double>(rhs) != row->rhs) ++violations;
              const bool holds = row->rel == Relation::LessEq      ? activity <= rhs
                                 : row->rel == Relation::GreaterEq ? activity >= rhs
                                                                   : activity == rhs;
              if (!holds) ++violations;
            }
          }
        }
      }
    }
    report(6, label, violations == 0,
           fmt("%lld points, %lld violations", (long long)points, (long long)violations));
  } catch (const std::exception& e) {
    report(6, label, false, e.what());
  }
}

void criterion_7(const ReferenceRun& ref) {
  const char* label = "calendar realizes the plan exactly and clears the calibrated cap";
  if (!ref.recovered_ok) {
    report(7, label, false, ref.error.empty() ? "no plan to place" : ref.error);
    return;
  }
  try {
    const LoadProfile profile = synthesize_profiles(ref.instance, kDefaultBenchmarkSeed);
    const double cap = calibrate_cap_mw(profile, ref.instance.e_sf_mwh);
    const auto [cal, rep] = place_outages(ref.recovered, profile, cap);

    bool structure = true;
    for (int z = 0; z < ref.instance.num_zones(); ++z) {
      if (static_cast<long long>(cal.outages[z].size()) != ref.recovered.k[z]) structure = false;
      for (const OutageInterval& iv : cal.outages[z])
        if (iv.length() != ref.recovered.d_slots[z]) structure = false;
    }

    double shed_cal = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    for (int z = 0; z < ref.instance.num_zones(); ++z) {
      double mn = profile.at(z, 0);
      double mx = mn;
      for (int t = 1; t < profile.num_slots; ++t) {
        mn = std::min(mn, profile.at(z, t));
        mx = std::max(mx, profile.at(z, t));
      }
      for (const OutageInterval& iv : cal.outages[z])
        for (int t = iv.start_slot; t < iv.end_slot; ++t) shed_cal += profile.at(z, t);
      const double slots = static_cast<double>(ref.recovered.k[z] * ref.recovered.d_slots[z]);
      lo += slots * mn;
      hi += slots * mx;
    }
    shed_cal *= 0.25;
    lo *= 0.25;
    hi *= 0.25;
    const bool energy = shed_cal >= lo - 1e-6 * (1.0 + lo) && shed_cal <= hi + 1e-6 * (1.0 + hi);
    const bool residual_ok = rep.residual_energy_mwh <= 0.05 * ref.instance.e_sf_mwh;
    report(7, label, structure && energy && residual_ok,
           fmt("shed %.0f MWh in [%.0f, %.0f], residual %.0f MWh = %.2f%% of e_sf; plan: %s",
               shed_cal, lo, hi, rep.residual_energy_mwh,
               rep.residual_energy_mwh / ref.instance.e_sf_mwh * 100.0,
               plan_provenance(ref).c_str()));
  } catch (const std::exception& e) {
    report(7, label, false, e.what());
  }
}

void criterion_8(const ProblemInstance& bench) {
  const char* label = "profile means, peak windows, and bit-identical regeneration";
  try {
    const LoadProfile profile = synthesize_profiles(bench, kDefaultBenchmarkSeed);
    const LoadProfile again = synthesize_profiles(bench, kDefaultBenchmarkSeed);
    const bool identical = profile.mw == again.mw;

    bool means_ok = true;
    bool windows_ok = true;
    for (int z = 0; z < bench.num_zones(); ++z) {
      double sum = 0.0;
      double in_sum = 0.0;
      int in_count = 0;
      for (int t = 0; t < profile.num_slots; ++t) {
        sum += profile.at(z, t);
        const int sod = t % ProblemInstance::slots_per_day;
        if (sod >= 64 && sod < 80) {
          in_sum += profile.at(z, t);
          ++in_count;
        }
      }
      const double mean = sum / profile.num_slots;
      if (std::fabs(mean - bench.zones[z].p_avg_mw) > 1e-6 * bench.zones[z].p_avg_mw)
        means_ok = false;
      if (bench.zones[z].category == ZoneCategory::Residential) {
        const double in_mean = in_sum / in_count;
        const double out_mean = (sum - in_sum) / (profile.num_slots - in_count);
        if (!(in_mean > out_mean)) windows_ok = false;
      }
    }
    report(8, label, identical && means_ok && windows_ok,
           fmt("means %s, 16-20h window %s, regeneration %s", means_ok ? "ok" : "off",
               windows_ok ? "elevated" : "flat", identical ? "identical" : "differs"));
  } catch (const std::exception& e) {
    report(8, label, false, e.what());
  }
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Picks a sampled instance whose whole pipeline (solve, recover, compare)
// completes, so the rerun check exercises every artifact writer.
std::optional<ProblemInstance> pick_demo_instance(const std::vector<SampledCase>& cases) {
  for (const SampledCase& c : cases) {
    if (!(c.solver_ok && c.solver.status == IlpStatus::Optimal)) continue;
    if (c.instance.e_sf_mwh <= 0.0) continue;  // a do-nothing plan demos poorly
    try {
      (void)recover(c.instance, plan_from_point(c.relax.layout, c.solver.x));
      return c.instance;
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

void criterion_9(const char* cli, const std::vector<SampledCase>& cases) {
  const char* label = "solve, compare, and profile reruns are byte-identical";
  if (cli == nullptr) {
    report(9, label, false, "no CLI path on the command line");
    return;
  }
  try {
    const fs::path scratch = "acceptance_scratch";
    fs::create_directories(scratch);
    const auto demo = pick_demo_instance(cases);
    if (!demo) {
      report(9, label, false, "no sampled instance completes the pipeline");
      return;
    }
    const fs::path demo_path = scratch / "demo_instance.json";
    save_instance(*demo, demo_path.string());

    const std::string instance_arg = "--instance \"" + demo_path.string() + "\"";
    const struct {
      const char* sub;
      std::string source;
      std::vector<const char*> artifacts;
    } runs[] = {{"solve", instance_arg, {"plan.json"}},
                {"compare", instance_arg, {"compare.csv"}},
                {"synth-profiles", "--benchmark --seed 7", {"profiles.csv", "total_demand.csv"}}};

    bool ok = true;
    std::string note;
    for (const auto& run : runs) {
      const fs::path out_dir = scratch / (std::string(run.sub) + "_out");
      const fs::path stdout_1 = scratch / (std::string(run.sub) + "_stdout_1.txt");
      const fs::path stdout_2 = scratch / (std::string(run.sub) + "_stdout_2.txt");
      const std::string base = std::string("\"") + cli + "\" " + run.sub + " " + run.source +
                               " --out \"" + out_dir.string() + "\"";
      auto shell = [&](const fs::path& capture) {
        const std::string cmd = base + " > \"" + capture.string() + "\" 2> /dev/null";
        return std::system(cmd.c_str()) == 0;
      };

      if (!shell(stdout_1)) {
        ok = false;
        note = fmt("%s run 1 failed", run.sub);
        break;
      }
      std::vector<std::pair<std::string, std::string>> snapshot;
      for (const char* artifact : run.artifacts) {
        const auto bytes = read_file(out_dir / artifact);
        if (!bytes) {
          ok = false;
          note = fmt("%s missing %s", run.sub, artifact);
          break;
        }
        snapshot.emplace_back(artifact, *bytes);
      }
      if (!ok) break;
      if (!shell(stdout_2)) {
        ok = false;
        note = fmt("%s run 2 failed", run.sub);
        break;
      }
      for (const auto& [artifact, bytes] : snapshot) {
        const auto rerun = read_file(out_dir / artifact);
        if (!rerun || *rerun != bytes) {
          ok = false;
          note = fmt("%s: %s differs between runs", run.sub, artifact.c_str());
        }
      }
      const auto out_a = read_file(stdout_1);
      const auto out_b = read_file(stdout_2);
      if (!out_a || !out_b || *out_a != *out_b) {
        ok = false;
        note = fmt("%s: stdout differs between runs", run.sub);
      }
      if (!ok) break;
    }
    report(9, label, ok, ok ? "plan.json, compare.csv, profiles.csv, total_demand.csv, stdout" : note);
  } catch (const std::exception& e) {
    report(9, label, false, e.what());
  }
}

void criterion_10(const ReferenceRun& ref) {
  const char* label = "30-zone relaxation proven optimal within limits";
  const bool ok = ref.proven && ref.nodes <= 1'000'000 && ref.solve_seconds < 60.0;
  std::string detail;
  if (ref.proven) {
    detail = fmt("%lld nodes, %.2f s", (long long)ref.nodes, ref.solve_seconds);
  } else if (ref.have_plan) {
    const double gap = (ref.objective - ref.best_bound) / ref.objective * 100.0;
    detail = fmt("tree still open at %lld nodes after %.0f s: bound %.1f, incumbent %.1f, "
                 "gap %.2f%%",
                 (long long)ref.nodes, ref.solve_seconds, ref.best_bound, ref.objective, gap);
  } else {
    detail = ref.error;
  }
  report(10, label, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  double suite_seconds = 0.0;
  const std::vector<SampledCase> cases = run_sampled_suite(&suite_seconds);
  criterion_1(cases, suite_seconds);
  criterion_2(cases);
  // Two reference runs: one with the budget sized to keep the whole
  // experiment under the five-second line of criterion 4, and the
  // default-budget run that feeds criteria 3, 5, 7, 10.
  const ReferenceRun timed = run_reference_case(20'000);
  const ReferenceRun ref = run_reference_case(1'000'000);
  criterion_3(cases, ref);
  criterion_4(timed);
  criterion_5(ref);
  criterion_6();
  criterion_7(ref);
  criterion_8(ref.instance);
  criterion_9(cli, cases);
  criterion_10(ref);
  return g_failures == 0 ? 0 : 1;
}
