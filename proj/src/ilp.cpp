#include "rotshed/ilp.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <ostream>
#include <queue>

#include "simplex_impl.hpp"

namespace rotshed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPruneMargin = 1e-9;

// Bound changes are kept as deltas chained to the parent so open nodes stay
// small; materializing walks the chain over the root boxes.
struct BranchDelta {
  int var;
  double bound;
  bool is_upper;
  std::shared_ptr<const BranchDelta> parent;
};

struct OpenNode {
  double bound;  // LP objective of the parent (-inf for the root)
  int depth;
  long long seq;
  std::shared_ptr<const BranchDelta> delta;
};

// priority_queue pops the "largest"; order so the largest is the node with
// the smallest bound, then the greatest depth, then the most recent.
struct NodeOrder {
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq < b.seq;
  }
};

// Rounded candidates are re-checked at their integer values, not at the LP
// floats, so a row can never be accepted on the strength of an epsilon.
bool verify_integer_point(const IntegerLinearProgram& p, const std::vector<long long>& x) {
  for (int j = 0; j < p.num_vars; ++j)
    if (x[j] < p.lower[j] || x[j] > p.upper[j]) return false;
  for (const LinearConstraint& c : p.constraints) {
    long double act = 0.0L;
    for (int j = 0; j < p.num_vars; ++j)
      if (c.coeffs[j] != 0.0)
        act += static_cast<long double>(c.coeffs[j]) * static_cast<long double>(x[j]);
    const long double tol = 1e-6L * (1.0L + std::abs(static_cast<long double>(c.rhs)));
    bool ok = true;
    switch (c.rel) {
      case Relation::LessEq: ok = act <= c.rhs + tol; break;
      case Relation::GreaterEq: ok = act >= c.rhs - tol; break;
      case Relation::Equal: ok = std::abs(act - static_cast<long double>(c.rhs)) <= tol; break;
    }
    if (!ok) return false;
  }
  return true;
}

double integer_objective(const IntegerLinearProgram& p, const std::vector<long long>& x) {
  double obj = 0.0;
  for (int j = 0; j < p.num_vars; ++j) obj += p.objective[j] * static_cast<double>(x[j]);
  return obj;
}

void trace_node(std::ostream* out, long long node, int depth, const char* bound,
                const std::string& branch) {
  if (!out) return;
  *out << "node=" << node << " depth=" << depth << " bound=" << bound << " branch=" << branch
       << "\n";
}

std::string format_bound(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

IlpSolution solve_ilp(const IntegerLinearProgram& program, const IlpOptions& opt) {
  detail::BoundedSimplex simplex(program);
  const int n = program.num_vars;
  std::vector<double> root_lb(program.lower.begin(), program.lower.end());
  std::vector<double> root_ub(program.upper.begin(), program.upper.end());

  // Depth-first plunge with best-bound restarts: after a branch, one child
  // continues the dive, the sibling waits in the bound-ordered heap. When a
  // dive dies (leaf, pruned, infeasible) the search resumes at the open node
  // with the smallest bound.
  std::priority_queue<OpenNode, std::vector<OpenNode>, NodeOrder> open;
  std::vector<OpenNode> dive;
  dive.push_back({-kInf, 0, 0, nullptr});
  long long seq = 0;
  long long node_count = 0;
  bool have_incumbent = false;
  double incumbent_obj = kInf;
  std::vector<long long> incumbent_x;
  double root_obj = -kInf;
  std::vector<double> root_d;
  std::vector<int> root_rest;

  std::vector<double> lb(n), ub(n);

  // Reduced-cost fixing from the root basis: any feasible point satisfies
  // obj >= root_obj + d_j * (x_j - resting bound), so once an incumbent caps
  // the objective, variables with a nonzero root reduced cost can only move a
  // bounded distance off their resting bound. Root duals stay valid for the
  // whole tree, so the root boxes are tightened in place.
  // Nodes are pruned once their bound reaches the incumbent or the external
  // cutoff, whichever is lower.
  auto prune_at = [&]() { return std::min(incumbent_obj, opt.cutoff); };

  auto tighten_root_boxes = [&]() {
    if (root_rest.empty()) return;
    const double slack = prune_at() - kPruneMargin - root_obj;
    if (!(slack >= 0.0) || !std::isfinite(slack)) return;
    for (int j = 0; j < n; ++j) {
      if (root_rest[j] < 0 && root_d[j] > 1e-9) {
        const double reach = std::floor(root_lb[j] + slack / root_d[j] + 1e-9);
        if (reach < root_ub[j]) root_ub[j] = reach;
      } else if (root_rest[j] > 0 && root_d[j] < -1e-9) {
        const double reach = std::ceil(root_ub[j] + slack / root_d[j] - 1e-9);
        if (reach > root_lb[j]) root_lb[j] = reach;
      }
    }
  };

  auto accept_incumbent = [&](double obj, std::vector<long long>&& xi) {
    if (obj >= prune_at()) return;
    incumbent_obj = obj;
    incumbent_x = std::move(xi);
    have_incumbent = true;
    tighten_root_boxes();
  };
  auto materialize = [&](const BranchDelta* delta) {
    lb = root_lb;
    ub = root_ub;
    for (const BranchDelta* d = delta; d; d = d->parent.get()) {
      if (d->is_upper)
        ub[d->var] = std::min(ub[d->var], d->bound);
      else
        lb[d->var] = std::max(lb[d->var], d->bound);
    }
  };

  // Snaps the LP point to the nearest integers; kept as the incumbent when it
  // happens to satisfy the original rows. Dive leaves provide the guaranteed
  // incumbents, this just finds them earlier.
  auto try_rounding = [&](const LpSolution& lp) {
    std::vector<long long> xi(n);
    for (int j = 0; j < n; ++j) xi[j] = std::llround(lp.x[j]);
    if (!verify_integer_point(program, xi)) return;
    accept_incumbent(integer_objective(program, xi), std::move(xi));
  };

  while (!dive.empty() || !open.empty()) {
    OpenNode node;
    if (!dive.empty()) {
      node = dive.back();
      dive.pop_back();
      if (node.bound >= prune_at() - kPruneMargin) continue;
    } else {
      node = open.top();
      // Heap is bound-ordered: once the cheapest open bound cannot beat the
      // incumbent, nothing left can, and optimality is proven.
      if (node.bound >= prune_at() - kPruneMargin) break;
      open.pop();
    }
    if (node_count >= opt.node_budget) {
      // Dive entries near the bottom of the stack can sit below the heap top,
      // so the proven bound has to scan them all.
      double best_open = open.empty() ? node.bound : std::min(node.bound, open.top().bound);
      for (const OpenNode& pending : dive) best_open = std::min(best_open, pending.bound);
      char msg[160];
      std::snprintf(msg, sizeof(msg),
                    "node budget %lld exhausted (incumbent %s, best open bound %.17g)",
                    static_cast<long long>(opt.node_budget),
                    have_incumbent ? format_bound(incumbent_obj).c_str() : "none", best_open);
      throw ResourceLimitError(msg, have_incumbent, incumbent_obj,
                               have_incumbent ? incumbent_x : std::vector<long long>{}, best_open,
                               node_count);
    }

    materialize(node.delta.get());
    // The root solves cold; every later node restarts from the previous
    // terminal basis, which stays dual feasible under bounds-only changes.
    const LpSolution lp = node_count == 0 ? simplex.solve(lb, ub, opt.lp)
                                          : simplex.resolve(lb, ub, opt.lp);
    ++node_count;
    if (lp.status == LpStatus::Infeasible) {
      trace_node(opt.trace, node_count, node.depth, "inf", "none");
      continue;
    }
    if (lp.status == LpStatus::Unbounded)
      throw SolverError("LP relaxation unbounded inside branch and bound");
    if (node_count == 1) {
      root_obj = lp.objective;
      simplex.structural_reduced_costs(root_d, root_rest);
      tighten_root_boxes();
    }
    if (lp.objective >= prune_at() - kPruneMargin) {
      trace_node(opt.trace, node_count, node.depth, format_bound(lp.objective).c_str(), "none");
      continue;
    }

    // Most fractional variable, lowest index on ties.
    int branch_var = -1;
    double branch_val = 0.0;
    double best_frac = opt.integrality_tol;
    for (int j = 0; j < n; ++j) {
      const double f = lp.x[j] - std::floor(lp.x[j]);
      const double score = std::min(f, 1.0 - f);
      if (score > best_frac) {
        best_frac = score;
        branch_var = j;
        branch_val = lp.x[j];
      }
    }

    if (branch_var < 0) {
      std::vector<long long> xi(n);
      for (int j = 0; j < n; ++j) xi[j] = std::llround(lp.x[j]);
      if (verify_integer_point(program, xi)) {
        accept_incumbent(integer_objective(program, xi), std::move(xi));
        trace_node(opt.trace, node_count, node.depth, format_bound(lp.objective).c_str(), "leaf");
        continue;
      }
      // The rounded point broke a row; split along the largest residual
      // fractionality instead of accepting it.
      double best = 0.0;
      for (int j = 0; j < n; ++j) {
        const double f = lp.x[j] - std::floor(lp.x[j]);
        const double score = std::min(f, 1.0 - f);
        if (score > best) {
          best = score;
          branch_var = j;
          branch_val = lp.x[j];
        }
      }
      if (branch_var < 0)
        throw SolverError("integral LP point failed integer re-verification");
    } else {
      try_rounding(lp);
      if (lp.objective >= prune_at() - kPruneMargin) {
        trace_node(opt.trace, node_count, node.depth, format_bound(lp.objective).c_str(), "none");
        continue;
      }
    }

    trace_node(opt.trace, node_count, node.depth, format_bound(lp.objective).c_str(),
               program.var_names.empty() ? std::to_string(branch_var)
                                         : program.var_names[branch_var]);
    const double floor_val = std::floor(branch_val);
    auto down = std::make_shared<const BranchDelta>(
        BranchDelta{branch_var, floor_val, true, node.delta});
    auto up = std::make_shared<const BranchDelta>(
        BranchDelta{branch_var, floor_val + 1.0, false, node.delta});
    const OpenNode down_node{lp.objective, node.depth + 1, ++seq, down};
    const OpenNode up_node{lp.objective, node.depth + 1, ++seq, up};
    // Plunge into the up child: raising a lower bound keeps the shortfall row
    // satisfiable, while capping a variable chokes the chained fairness rows
    // and kills the dive. Up-first dives reach integral leaves reliably.
    open.push(down_node);
    dive.push_back(up_node);
  }

  IlpSolution sol;
  sol.node_count = node_count;
  if (have_incumbent) {
    sol.status = IlpStatus::Optimal;
    sol.objective = incumbent_obj;
    sol.x = std::move(incumbent_x);
    sol.gap = 0.0;
    // Sandwich: the root relaxation can never beat the integer optimum.
    assert(root_obj <= incumbent_obj + 1e-7 * (1.0 + std::abs(incumbent_obj)));
    (void)root_obj;
  } else {
    sol.status = IlpStatus::Infeasible;
  }
  return sol;
}

}  // namespace rotshed
