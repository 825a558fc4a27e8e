// Command line front end: solve, compare, calendar, synth-profiles,
// export-lp. Exit codes: 0 success, 1 usage or I/O trouble, 2 the instance
// is infeasible in one of its flavors, 3 a resource budget ran out.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotshed/baselines.hpp"
#include "rotshed/benchmark.hpp"
#include "rotshed/calendar.hpp"
#include "rotshed/errors.hpp"
#include "rotshed/ilp.hpp"
#include "rotshed/instance_json.hpp"
#include "rotshed/model.hpp"
#include "rotshed/profiles.hpp"
#include "rotshed/recovery.hpp"
#include "rotshed/relax.hpp"

namespace {

using namespace rotshed;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitResource = 3;

struct CommonArgs {
  std::string instance_path;
  bool benchmark = false;
  std::uint64_t seed = kDefaultBenchmarkSeed;
  std::string out_dir = ".";
  double c_delta = -1.0;  // negative = keep the instance's value
  long long node_budget = 1'000'000;
  bool classical_envelope = false;
  bool trace = false;
  double cap_mw = 0.0;  // <= 0 = calibrate from e_sf
};

void add_instance_options(CLI::App* sub, CommonArgs& args) {
  auto* inst = sub->add_option("--instance", args.instance_path, "JSON instance file");
  auto* bench = sub->add_flag("--benchmark", args.benchmark,
                              "use the built-in 30-zone case (see --seed)");
  inst->excludes(bench);
  bench->excludes(inst);
  sub->add_option("--seed", args.seed, "seed for --benchmark and profile synthesis");
  sub->add_option("--out", args.out_dir, "output directory (created if missing)");
  sub->add_option("--c-delta", args.c_delta,
                  "override the fairness spacing with a nonnegative value");
}

void add_solver_options(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--node-budget", args.node_budget, "branch-and-bound node budget");
  sub->add_flag("--classical-envelope", args.classical_envelope,
                "add the tighter classical upper envelope row per zone");
  sub->add_flag("--trace", args.trace, "print one line per explored node to stderr");
}

ProblemInstance load_from_args(const CommonArgs& args) {
  if (!args.benchmark && args.instance_path.empty())
    throw Error("need either --instance <file> or --benchmark");
  ProblemInstance inst =
      args.benchmark ? benchmark_instance(args.seed) : load_instance(args.instance_path);
  if (args.c_delta >= 0.0) {
    inst.c_delta = args.c_delta;
    inst.validate();
  }
  return inst;
}

std::filesystem::path out_path(const CommonArgs& args, const std::string& name) {
  std::filesystem::create_directories(args.out_dir);
  return std::filesystem::path(args.out_dir) / name;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out.good()) throw Error("cannot write " + path.string());
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

// Tells apart the two ways the relaxation can die: not enough shed capacity
// overall, or fairness spacing too tight for the cost ranges.
std::string diagnose_infeasible(const ProblemInstance& instance, const IlpOptions& ilp_opts,
                                const RelaxOptions& relax_opts) {
  double max_shed = 0.0;
  for (const ZoneSpec& z : instance.zones)
    max_shed += 0.25 * static_cast<double>(z.k_max) * static_cast<double>(z.d_max_slots) *
                z.p_avg_mw;
  if (max_shed < instance.e_sf_mwh) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "every zone at its maximum shed covers %.3f MWh, short of e_sf = %.3f MWh",
                  max_shed, instance.e_sf_mwh);
    return buf;
  }
  Relaxation relaxation = build_relaxation(instance, relax_opts);
  auto& rows = relaxation.program.constraints;
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const LinearConstraint& c) {
                              return c.name.rfind("fair", 0) == 0;
                            }),
             rows.end());
  try {
    const IlpSolution unfair = solve_ilp(relaxation.program, ilp_opts);
    if (unfair.status == IlpStatus::Optimal) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "feasible without the fairness rows; the spacing c_delta = %.3f is too tight",
                    instance.c_delta);
      return buf;
    }
  } catch (const Error&) {
    // diagnosis is best effort; fall through
  }
  return "no integer point satisfies the shortfall, box and fairness rows together";
}

struct SolveResult {
  Relaxation relaxation;
  IlpSolution ilp;
  ShedPlan relaxed_plan;
  ShedPlan recovered;
  bool exact = false;
};

// Relaxation + search + recovery. Throws on budget trouble; returns
// IlpStatus::Infeasible inside the result so callers can diagnose.
SolveResult solve_instance(const ProblemInstance& instance, const CommonArgs& args) {
  SolveResult r;
  RelaxOptions relax_opts;
  relax_opts.classical_upper_envelope = args.classical_envelope;
  r.relaxation = build_relaxation(instance, relax_opts);

  IlpOptions ilp_opts;
  ilp_opts.node_budget = args.node_budget;
  if (args.trace) ilp_opts.trace = &std::cerr;

  const auto t0 = std::chrono::steady_clock::now();
  r.ilp = solve_ilp(r.relaxation.program, ilp_opts);
  std::fprintf(stderr, "timing: relaxation search %.1f ms, %lld nodes\n", elapsed_ms(t0),
               r.ilp.node_count);
  if (r.ilp.status != IlpStatus::Optimal) return r;

  r.relaxed_plan = plan_from_point(r.relaxation.layout, r.ilp.x);
  r.exact = is_exact(r.relaxed_plan);
  const auto t1 = std::chrono::steady_clock::now();
  r.recovered = recover(instance, r.relaxed_plan);
  std::fprintf(stderr, "timing: recovery %.1f ms\n", elapsed_ms(t1));
  return r;
}

nlohmann::json plan_report(const ProblemInstance& instance, const SolveResult& r) {
  nlohmann::json j = plan_to_json(instance, r.recovered);
  j["e_sf_mwh"] = instance.e_sf_mwh;
  j["shed_energy_mwh"] = shed_energy_mwh(instance, r.recovered);
  j["relaxation"] = {{"objective", r.ilp.objective},
                     {"node_count", r.ilp.node_count},
                     {"gap", r.ilp.gap},
                     {"exact", r.exact}};
  return j;
}

int run_solve(const CommonArgs& args) {
  const ProblemInstance instance = load_from_args(args);
  const SolveResult r = solve_instance(instance, args);
  if (r.ilp.status != IlpStatus::Optimal) {
    IlpOptions ilp_opts;
    ilp_opts.node_budget = args.node_budget;
    RelaxOptions relax_opts;
    relax_opts.classical_upper_envelope = args.classical_envelope;
    std::cout << "infeasible: " << diagnose_infeasible(instance, ilp_opts, relax_opts) << "\n";
    return kExitInfeasible;
  }

  if (args.benchmark) save_instance(instance, out_path(args, "instance.json").string());
  const nlohmann::json report = plan_report(instance, r);
  write_text_file(out_path(args, "plan.json"), report.dump(2) + "\n");

  char buf[200];
  std::snprintf(buf, sizeof(buf), "zones: %d\n", instance.num_zones());
  std::cout << buf;
  std::snprintf(buf, sizeof(buf), "relaxed objective: %.6f (%lld nodes, gap %.3g)\n",
                r.ilp.objective, r.ilp.node_count, r.ilp.gap);
  std::cout << buf;
  std::snprintf(buf, sizeof(buf), "recovered cost: %.6f (%s)\n",
                total_cost(instance, r.recovered), r.exact ? "exact" : "repaired");
  std::cout << buf;
  std::snprintf(buf, sizeof(buf), "shed energy: %.3f MWh against e_sf %.3f MWh\n",
                shed_energy_mwh(instance, r.recovered), instance.e_sf_mwh);
  std::cout << buf;
  const std::vector<int> fair = check_feasible(instance, r.recovered).fairness_violators();
  if (fair.empty()) {
    std::cout << "fairness: all adjacent pairs within c_delta\n";
  } else {
    std::snprintf(buf, sizeof(buf),
                  "fairness: %zu adjacent pair(s) drift past c_delta after recovery\n",
                  fair.size());
    std::cout << buf;
  }
  std::cout << "wrote " << out_path(args, "plan.json").string() << "\n";
  return kExitOk;
}

void describe_baseline(const ProblemInstance& instance, const ShedPlan& plan,
                       const char* label) {
  const FeasibilityReport rep = check_feasible(instance, plan);
  char buf[240];
  std::snprintf(buf, sizeof(buf), "%s baseline cost: %.6f\n", label, total_cost(instance, plan));
  std::cout << buf;
  const std::vector<int> box = rep.box_violators();
  const std::vector<int> fair = rep.fairness_violators();
  if (!box.empty()) {
    std::snprintf(buf, sizeof(buf),
                  "  note: %s ignores the duration bounds; %zu zone(s) fall outside their box\n",
                  label, box.size());
    std::cout << buf;
  }
  if (!fair.empty()) {
    std::snprintf(buf, sizeof(buf), "  note: %s breaks the fairness spacing at %zu adjacent pair(s)\n",
                  label, fair.size());
    std::cout << buf;
  }
}

int run_compare(const CommonArgs& args) {
  const ProblemInstance instance = load_from_args(args);
  const SolveResult r = solve_instance(instance, args);
  if (r.ilp.status != IlpStatus::Optimal) {
    IlpOptions ilp_opts;
    ilp_opts.node_budget = args.node_budget;
    RelaxOptions relax_opts;
    relax_opts.classical_upper_envelope = args.classical_envelope;
    std::cout << "infeasible: " << diagnose_infeasible(instance, ilp_opts, relax_opts) << "\n";
    return kExitInfeasible;
  }
  const ShedPlan seq = sequencing_plan(instance);
  const ShedPlan eq = equal_power_plan(instance);

  std::string csv =
      "zone,category,p_avg_mw,opt_k,opt_d_slots,opt_cost,seq_k,seq_d_slots,seq_cost,"
      "eq_k,eq_d_slots,eq_cost\n";
  char buf[320];
  for (int z = 0; z < instance.num_zones(); ++z) {
    const ZoneSpec& zone = instance.zones[z];
    std::snprintf(buf, sizeof(buf), "%d,%s,%.6f,%lld,%lld,%.6f,%lld,%lld,%.6f,%lld,%lld,%.6f\n",
                  zone.id, to_string(zone.category), zone.p_avg_mw, r.recovered.k[z],
                  r.recovered.d_slots[z], zone_cost(zone.coeffs, r.recovered.k[z],
                                                    r.recovered.d_slots[z]),
                  seq.k[z], seq.d_slots[z], zone_cost(zone.coeffs, seq.k[z], seq.d_slots[z]),
                  eq.k[z], eq.d_slots[z], zone_cost(zone.coeffs, eq.k[z], eq.d_slots[z]));
    csv += buf;
  }
  write_text_file(out_path(args, "compare.csv"), csv);

  const double opt_cost = total_cost(instance, r.recovered);
  const double seq_cost = total_cost(instance, seq);
  const double eq_cost = total_cost(instance, eq);
  std::snprintf(buf, sizeof(buf), "optimized cost: %.6f (%s recovery)\n", opt_cost,
                r.exact ? "exact" : "repaired");
  std::cout << buf;
  describe_baseline(instance, seq, "sequencing");
  describe_baseline(instance, eq, "equal-power");
  std::snprintf(buf, sizeof(buf), "reduction vs sequencing: %.2f%%\n",
                100.0 * (seq_cost - opt_cost) / seq_cost);
  std::cout << buf;
  std::snprintf(buf, sizeof(buf), "reduction vs equal-power: %.2f%%\n",
                100.0 * (eq_cost - opt_cost) / eq_cost);
  std::cout << buf;
  std::cout << "wrote " << out_path(args, "compare.csv").string() << "\n";
  return kExitOk;
}

int run_calendar(const CommonArgs& args) {
  const ProblemInstance instance = load_from_args(args);
  const SolveResult r = solve_instance(instance, args);
  if (r.ilp.status != IlpStatus::Optimal) {
    IlpOptions ilp_opts;
    ilp_opts.node_budget = args.node_budget;
    RelaxOptions relax_opts;
    relax_opts.classical_upper_envelope = args.classical_envelope;
    std::cout << "infeasible: " << diagnose_infeasible(instance, ilp_opts, relax_opts) << "\n";
    return kExitInfeasible;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const LoadProfile profile = synthesize_profiles(instance, args.seed);
  const double cap =
      args.cap_mw > 0.0 ? args.cap_mw : calibrate_cap_mw(profile, instance.e_sf_mwh);
  const auto placed = place_outages(r.recovered, profile, cap);
  std::fprintf(stderr, "timing: profiles and placement %.1f ms\n", elapsed_ms(t0));
  const Calendar& cal = placed.first;
  const CapReport& rep = placed.second;

  write_text_file(out_path(args, "calendar.csv"), calendar_csv(cal));
  write_text_file(out_path(args, "cap_report.csv"), cap_report_csv(rep));
  std::string text;
  for (int z = 0; z < instance.num_zones(); ++z) {
    const ZoneCalendarExport exp = export_zone_calendar(cal, z + 1);
    char name[64];
    std::snprintf(name, sizeof(name), "calendar_zone_%d.csv", z + 1);
    write_text_file(out_path(args, name), exp.csv);
    text += "zone " + std::to_string(z + 1) + ":\n" + exp.text;
  }
  write_text_file(out_path(args, "calendar.txt"), text);

  char buf[240];
  std::snprintf(buf, sizeof(buf), "cap: %.3f MW (%s)\n", cap,
                args.cap_mw > 0.0 ? "given" : "calibrated");
  std::cout << buf;
  std::snprintf(buf, sizeof(buf), "residual above cap: %.3f MWh over %d slot(s)\n",
                rep.residual_energy_mwh, rep.uncovered_slots);
  std::cout << buf;
  std::cout << "wrote " << out_path(args, "calendar.csv").string() << " and per-zone files\n";
  return kExitOk;
}

int run_synth_profiles(const CommonArgs& args) {
  const ProblemInstance instance = load_from_args(args);
  const auto t0 = std::chrono::steady_clock::now();
  const LoadProfile profile = synthesize_profiles(instance, args.seed);
  std::fprintf(stderr, "timing: synthesis %.1f ms\n", elapsed_ms(t0));

  std::ofstream out(out_path(args, "profiles.csv"), std::ios::binary);
  save_profile_csv(profile, out);
  if (!out.good()) throw Error("cannot write profiles.csv");
  out.close();
  write_text_file(out_path(args, "total_demand.csv"), total_demand_csv(profile));

  const std::vector<double> total = total_demand(profile);
  const double peak = *std::max_element(total.begin(), total.end());
  char buf[160];
  std::snprintf(buf, sizeof(buf), "zones: %d, slots: %d, peak total demand: %.3f MW\n",
                profile.num_zones, profile.num_slots, peak);
  std::cout << buf;
  std::cout << "wrote " << out_path(args, "profiles.csv").string() << "\n";
  return kExitOk;
}

int run_export_lp(const CommonArgs& args) {
  const ProblemInstance instance = load_from_args(args);
  RelaxOptions relax_opts;
  relax_opts.classical_upper_envelope = args.classical_envelope;
  const Relaxation relaxation = build_relaxation(instance, relax_opts);
  write_text_file(out_path(args, "relaxation.lp"), export_lp_text(relaxation.program));
  char buf[120];
  std::snprintf(buf, sizeof(buf), "wrote relaxation.lp (%d variables, %zu rows)\n",
                relaxation.program.num_vars, relaxation.program.constraints.size());
  std::cout << buf;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotational load-shedding scheduler"};
  app.require_subcommand(1);
  CommonArgs args;

  CLI::App* solve = app.add_subcommand("solve", "solve one instance and write plan.json");
  add_instance_options(solve, args);
  add_solver_options(solve, args);

  CLI::App* compare =
      app.add_subcommand("compare", "solve and compare against both baselines");
  add_instance_options(compare, args);
  add_solver_options(compare, args);

  CLI::App* calendar =
      app.add_subcommand("calendar", "solve and place the outages on the horizon");
  add_instance_options(calendar, args);
  add_solver_options(calendar, args);
  calendar->add_option("--cap-mw", args.cap_mw,
                       "supply cap; omitted or nonpositive calibrates from e_sf");

  CLI::App* synth = app.add_subcommand("synth-profiles", "write seeded demand profiles");
  add_instance_options(synth, args);

  CLI::App* exportlp = app.add_subcommand("export-lp", "write the relaxation in LP format");
  add_instance_options(exportlp, args);
  exportlp->add_flag("--classical-envelope", args.classical_envelope,
                     "add the tighter classical upper envelope row per zone");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(args);
    if (compare->parsed()) return run_compare(args);
    if (calendar->parsed()) return run_calendar(args);
    if (synth->parsed()) return run_synth_profiles(args);
    if (exportlp->parsed()) return run_export_lp(args);
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CannotRecoverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InfeasibleAfterRecoveryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ImpossibleCalendarError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InfeasibleCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
