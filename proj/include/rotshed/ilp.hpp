#pragma once

#include <iosfwd>
#include <limits>
#include <vector>

#include "rotshed/relax.hpp"

namespace rotshed {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;  // structural variables only
  long long iterations = 0;
};

struct SimplexOptions {
  double feas_tol = 1e-7;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_streak_for_bland = 40;
  int refactor_interval = 100;
  long long max_iterations = 200000;
};

// Bounded-variable primal simplex on the continuous relaxation (integrality
// dropped). Deterministic: Dantzig pricing with lowest-index tie-breaks,
// Bland's rule after a degenerate streak.
LpSolution solve_lp(const IntegerLinearProgram& program, const SimplexOptions& options = {});

enum class IlpStatus { Optimal, Infeasible };

struct IlpSolution {
  IlpStatus status = IlpStatus::Infeasible;
  double objective = 0.0;
  std::vector<long long> x;
  long long node_count = 0;
  double gap = 0.0;  // proven optimality gap, 0 once Optimal
};

struct IlpOptions {
  long long node_budget = 1'000'000;
  double integrality_tol = 1e-6;
  // Prune every node whose relaxation bound reaches this value, as if an
  // incumbent with this objective were already known. With a finite cutoff an
  // Infeasible result means no integer point beats the cutoff.
  double cutoff = std::numeric_limits<double>::infinity();
  SimplexOptions lp;
  std::ostream* trace = nullptr;  // one line per explored node when set
};

// Branch and bound over LP relaxations: best-bound node selection (ties by
// depth, then recency), branching on the most fractional variable (ties by
// lowest index). Accepted incumbents are re-verified on the original rows at
// rounded integer values. Throws ResourceLimitError past the node budget.
IlpSolution solve_ilp(const IntegerLinearProgram& program, const IlpOptions& options = {});

}  // namespace rotshed
