#include "rotshed/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace rotshed {

namespace {

[[noreturn]] void refuse(long double points, long long budget) {
  char msg[120];
  std::snprintf(msg, sizeof(msg), "enumeration of %.6Lg points exceeds the budget of %lld",
                points, budget);
  throw BudgetExceededError(msg);
}

}  // namespace

std::optional<OriginalOptimum> brute_force_original(const ProblemInstance& instance,
                                                    long long budget) {
  instance.validate();
  const int n = instance.num_zones();

  long double points = 1.0L;
  for (const ZoneSpec& z : instance.zones)
    points *= static_cast<long double>(z.k_max + 1) *
              static_cast<long double>(z.d_max_slots - z.d_min_slots + 1);
  if (points > static_cast<long double>(budget)) refuse(points, budget);

  // Digits in (k_1, d_1, k_2, d_2, ...) order; the odometer bumps the last
  // digit first, so points stream in ascending lexicographic order and the
  // first strict improvement is automatically the smallest optimal vector.
  std::vector<long long> lo(2 * n), hi(2 * n), x(2 * n);
  for (int i = 0; i < n; ++i) {
    lo[2 * i] = 0;
    hi[2 * i] = instance.zones[i].k_max;
    lo[2 * i + 1] = instance.zones[i].d_min_slots;
    hi[2 * i + 1] = instance.zones[i].d_max_slots;
  }
  x = lo;

  const double shortfall_tol = 1e-9 * (1.0 + std::abs(instance.e_sf_mwh));
  const double fairness_tol = 1e-9 * (1.0 + instance.c_delta);
  std::vector<double> costs(n);
  bool found = false;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<long long> best_x;

  for (;;) {
    double shed4 = 0.0;
    for (int i = 0; i < n; ++i)
      shed4 += static_cast<double>(x[2 * i + 1]) * static_cast<double>(x[2 * i]) *
               instance.zones[i].p_avg_mw;
    if (0.25 * shed4 >= instance.e_sf_mwh - shortfall_tol) {
      bool fair = true;
      for (int i = 0; i < n; ++i) costs[i] = zone_cost(instance.zones[i].coeffs, x[2 * i], x[2 * i + 1]);
      for (int i = 0; i + 1 < n && fair; ++i)
        fair = std::abs(costs[i] - costs[i + 1]) <= instance.c_delta + fairness_tol;
      if (fair) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += costs[i];
        if (!found || total < best_cost) {
          best_cost = total;
          best_x = x;
          found = true;
        }
      }
    }
    int d = 2 * n - 1;
    while (d >= 0 && x[d] == hi[d]) {
      x[d] = lo[d];
      --d;
    }
    if (d < 0) break;
    ++x[d];
  }

  if (!found) return std::nullopt;
  OriginalOptimum out;
  out.plan = ShedPlan::zeros(n);
  for (int i = 0; i < n; ++i) {
    out.plan.k[i] = best_x[2 * i];
    out.plan.d_slots[i] = best_x[2 * i + 1];
    out.plan.w_slots[i] = best_x[2 * i] * best_x[2 * i + 1];
  }
  out.cost = total_cost(instance, out.plan);
  return out;
}

IlpSolution brute_force_ilp(const IntegerLinearProgram& p, long long budget) {
  const int n = p.num_vars;
  const int m = static_cast<int>(p.constraints.size());

  IlpSolution sol;
  for (int j = 0; j < n; ++j) {
    if (p.lower[j] > p.upper[j]) {
      sol.status = IlpStatus::Infeasible;
      return sol;
    }
  }
  long double points = 1.0L;
  for (int j = 0; j < n; ++j) points *= static_cast<long double>(p.upper[j] - p.lower[j] + 1);
  if (points > static_cast<long double>(budget)) refuse(points, budget);

  struct ColEntry {
    int row;
    double coeff;
  };
  std::vector<std::vector<ColEntry>> cols(n);
  std::vector<double> rhs(m), tol(m);
  std::vector<Relation> rel(m);
  for (int i = 0; i < m; ++i) {
    const LinearConstraint& c = p.constraints[i];
    if (static_cast<int>(c.coeffs.size()) != n)
      throw DimensionError("constraint row width does not match variable count");
    rhs[i] = c.rhs;
    rel[i] = c.rel;
    tol[i] = 1e-9 * (1.0 + std::abs(c.rhs));
    for (int j = 0; j < n; ++j)
      if (c.coeffs[j] != 0.0) cols[j].push_back({i, c.coeffs[j]});
  }

  std::vector<long long> x(p.lower.begin(), p.lower.end());
  std::vector<double> act(m, 0.0);
  std::vector<bool> ok(m, false);
  int violated = 0;

  auto row_ok = [&](int i) {
    switch (rel[i]) {
      case Relation::LessEq: return act[i] <= rhs[i] + tol[i];
      case Relation::GreaterEq: return act[i] >= rhs[i] - tol[i];
      case Relation::Equal: return std::abs(act[i] - rhs[i]) <= tol[i];
    }
    return false;
  };
  auto resync = [&]() {
    std::fill(act.begin(), act.end(), 0.0);
    for (int j = 0; j < n; ++j)
      for (const ColEntry& e : cols[j]) act[e.row] += e.coeff * static_cast<double>(x[j]);
    violated = 0;
    for (int i = 0; i < m; ++i) {
      ok[i] = row_ok(i);
      if (!ok[i]) ++violated;
    }
  };
  auto apply_delta = [&](int j, long long delta) {
    for (const ColEntry& e : cols[j]) {
      act[e.row] += e.coeff * static_cast<double>(delta);
      const bool now = row_ok(e.row);
      if (ok[e.row] && !now) ++violated;
      if (!ok[e.row] && now) --violated;
      ok[e.row] = now;
    }
  };

  resync();
  bool found = false;
  double best_obj = std::numeric_limits<double>::infinity();
  std::vector<long long> best_x;
  long long visited = 0;
  long long steps_since_resync = 0;

  for (;;) {
    ++visited;
    if (violated == 0) {
      double obj = 0.0;
      for (int j = 0; j < n; ++j) obj += p.objective[j] * static_cast<double>(x[j]);
      if (!found || obj < best_obj) {
        // Candidate improvements are confirmed on freshly computed
        // activities so incremental drift can never crown a false optimum.
        resync();
        if (violated == 0) {
          best_obj = obj;
          best_x = x;
          found = true;
        }
      }
    }
    int j = n - 1;
    while (j >= 0 && x[j] == p.upper[j]) {
      apply_delta(j, p.lower[j] - x[j]);
      x[j] = p.lower[j];
      --j;
    }
    if (j < 0) break;
    apply_delta(j, 1);
    ++x[j];
    if (++steps_since_resync >= (1 << 20)) {
      resync();
      steps_since_resync = 0;
    }
  }

  sol.node_count = visited;
  if (found) {
    sol.status = IlpStatus::Optimal;
    sol.objective = best_obj;
    sol.x = std::move(best_x);
    sol.gap = 0.0;
  } else {
    sol.status = IlpStatus::Infeasible;
  }
  return sol;
}

}  // namespace rotshed
