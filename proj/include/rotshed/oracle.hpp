#pragma once

#include <optional>

#include "rotshed/ilp.hpp"
#include "rotshed/model.hpp"

namespace rotshed {

struct OriginalOptimum {
  ShedPlan plan;  // consistent, w = k*d
  double cost = 0.0;
};

// Enumerates every (k_n, d_n) box point of the bilinear problem, filters by
// shortfall, boxes and fairness, and returns the cheapest plan. Ties are
// broken toward the lexicographically smallest (k_1, d_1, k_2, d_2, ...)
// vector. Returns nullopt when no point is feasible. Throws
// BudgetExceededError when the box product exceeds the budget.
std::optional<OriginalOptimum> brute_force_original(const ProblemInstance& instance,
                                                    long long budget = 100'000'000);

// Enumerates every integer point of the program's variable boxes and filters
// by the constraint rows. Same lexicographic tie-break over x. node_count
// reports the number of points enumerated.
IlpSolution brute_force_ilp(const IntegerLinearProgram& program,
                            long long budget = 100'000'000);

}  // namespace rotshed
