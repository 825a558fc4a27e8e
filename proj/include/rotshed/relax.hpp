#pragma once

#include <string>
#include <vector>

#include "rotshed/model.hpp"

namespace rotshed {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<double> coeffs;  // dense, one entry per variable
  Relation rel = Relation::LessEq;
  double rhs = 0.0;
  std::string name;
};

// Minimization over integer variables in finite boxes.
struct IntegerLinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<long long> lower;
  std::vector<long long> upper;
  std::vector<LinearConstraint> constraints;
  std::vector<std::string> var_names;
};

// Column order is (k_0, d_0, w_0, k_1, d_1, w_1, ...) with 0-based zones.
struct VariableLayout {
  int num_zones = 0;
  int k_index(int zone) const { return 3 * zone; }
  int d_index(int zone) const { return 3 * zone + 1; }
  int w_index(int zone) const { return 3 * zone + 2; }
  int num_vars() const { return 3 * num_zones; }
};

struct RelaxOptions {
  // Adds the tighter classical upper facet w <= d_min*k + k_max*d - k_max*d_min
  // on top of the four rows the formulation prescribes.
  bool classical_upper_envelope = false;
};

struct Relaxation {
  IntegerLinearProgram program;
  VariableLayout layout;
};

// Linearizes the bilinear schedule problem: w_n stands in for d_n*k_n and is
// fenced by four envelope rows per zone; the shortfall and fairness rows are
// written on (k, d, w). Throws InvalidInstanceError on a malformed instance.
Relaxation build_relaxation(const ProblemInstance& instance, const RelaxOptions& options = {});

// sum_n 0.25*a1*w_n + 0.25*a2*d_n + a3*k_n. Equals total_cost on consistent
// plans.
double relaxed_objective(const ProblemInstance& instance, const ShedPlan& plan);

ShedPlan plan_from_point(const VariableLayout& layout, const std::vector<long long>& x);
std::vector<long long> point_from_plan(const VariableLayout& layout, const ShedPlan& plan);

// Plain-text LP-format rendering: objective, named rows, bounds, integrality.
std::string export_lp_text(const IntegerLinearProgram& program);

}  // namespace rotshed
