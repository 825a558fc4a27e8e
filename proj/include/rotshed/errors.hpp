#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rotshed {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct InvalidInstanceError : Error {
  using Error::Error;
};

struct InvalidPlanError : Error {
  using Error::Error;
};

struct JsonError : Error {
  using Error::Error;
};

// Numerical failure inside the simplex (anti-cycling budget exhausted or a
// basis that cannot be refactorized).
struct SolverError : Error {
  using Error::Error;
};

// Branch-and-bound node budget exhausted. Carries the best incumbent found
// so far (objective and full assignment) and the proven bound at the moment
// the search stopped, so callers can keep working with the best plan seen.
struct ResourceLimitError : Error {
  ResourceLimitError(const std::string& msg, bool has_incumbent_,
                     double incumbent_objective_, std::vector<long long> incumbent_x_,
                     double best_bound_, long long nodes_)
      : Error(msg),
        has_incumbent(has_incumbent_),
        incumbent_objective(incumbent_objective_),
        incumbent_x(std::move(incumbent_x_)),
        best_bound(best_bound_),
        nodes(nodes_) {}
  bool has_incumbent;
  double incumbent_objective;
  std::vector<long long> incumbent_x;
  double best_bound;
  long long nodes;
};

// Recovery cannot rescale a plan that sheds nothing.
struct CannotRecoverError : Error {
  using Error::Error;
};

// Recovery ran out of outage-count headroom; residual_mwh is the energy
// still missing against the shortfall target.
struct InfeasibleAfterRecoveryError : Error {
  InfeasibleAfterRecoveryError(const std::string& msg, double residual)
      : Error(msg), residual_mwh(residual) {}
  double residual_mwh;
};

// Exhaustive enumeration refused because the search space exceeds the budget.
struct BudgetExceededError : Error {
  using Error::Error;
};

struct ImpossibleCalendarError : Error {
  using Error::Error;
};

struct InfeasibleCapError : Error {
  using Error::Error;
};

}  // namespace rotshed
