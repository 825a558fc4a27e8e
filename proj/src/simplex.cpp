#include "simplex_impl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rotshed::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotEps = 1e-9;       // min |pivot| accepted in the ratio test
constexpr double kDegenerateStep = 1e-10;
constexpr double kSingularEps = 1e-12;

}  // namespace

BoundedSimplex::BoundedSimplex(const IntegerLinearProgram& program) : program_(&program) {
  n_ = program.num_vars;
  m_ = static_cast<int>(program.constraints.size());
  total_ = n_ + 2 * m_;
  cols_.resize(total_);
  rhs_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    const LinearConstraint& c = program.constraints[i];
    if (static_cast<int>(c.coeffs.size()) != n_)
      throw DimensionError("constraint row width does not match variable count");
    rhs_[i] = c.rhs;
    for (int j = 0; j < n_; ++j) {
      if (c.coeffs[j] == 0.0) continue;
      cols_[j].rows.push_back(i);
      cols_[j].vals.push_back(c.coeffs[j]);
    }
    cols_[slack_index(i)].rows.push_back(i);
    cols_[slack_index(i)].vals.push_back(1.0);
    cols_[artificial_index(i)].rows.push_back(i);
    cols_[artificial_index(i)].vals.push_back(1.0);
  }
}

double BoundedSimplex::nonbasic_value(int j) const {
  return state_[j] == VarState::AtUpper ? ub_[j] : lb_[j];
}

void BoundedSimplex::refactorize() {
  if (m_ == 0) return;
  // Gauss-Jordan on [B | I] with partial pivoting.
  std::vector<double> b(static_cast<std::size_t>(m_) * m_, 0.0);
  for (int slot = 0; slot < m_; ++slot) {
    const SparseColumn& col = cols_[basis_[slot]];
    for (std::size_t t = 0; t < col.rows.size(); ++t)
      b[static_cast<std::size_t>(col.rows[t]) * m_ + slot] = col.vals[t];
  }
  std::vector<double> inv(static_cast<std::size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) inv[static_cast<std::size_t>(i) * m_ + i] = 1.0;
  for (int c = 0; c < m_; ++c) {
    int piv_row = c;
    double piv_mag = std::abs(b[static_cast<std::size_t>(c) * m_ + c]);
    for (int r = c + 1; r < m_; ++r) {
      const double mag = std::abs(b[static_cast<std::size_t>(r) * m_ + c]);
      if (mag > piv_mag) {
        piv_mag = mag;
        piv_row = r;
      }
    }
    if (piv_mag < kSingularEps) throw SolverError("singular basis during refactorization");
    if (piv_row != c) {
      for (int j = 0; j < m_; ++j) {
        std::swap(b[static_cast<std::size_t>(piv_row) * m_ + j],
                  b[static_cast<std::size_t>(c) * m_ + j]);
        std::swap(inv[static_cast<std::size_t>(piv_row) * m_ + j],
                  inv[static_cast<std::size_t>(c) * m_ + j]);
      }
    }
    const double piv = b[static_cast<std::size_t>(c) * m_ + c];
    for (int j = 0; j < m_; ++j) {
      b[static_cast<std::size_t>(c) * m_ + j] /= piv;
      inv[static_cast<std::size_t>(c) * m_ + j] /= piv;
    }
    for (int r = 0; r < m_; ++r) {
      if (r == c) continue;
      const double f = b[static_cast<std::size_t>(r) * m_ + c];
      if (f == 0.0) continue;
      for (int j = 0; j < m_; ++j) {
        b[static_cast<std::size_t>(r) * m_ + j] -= f * b[static_cast<std::size_t>(c) * m_ + j];
        inv[static_cast<std::size_t>(r) * m_ + j] -= f * inv[static_cast<std::size_t>(c) * m_ + j];
      }
    }
  }
  binv_ = std::move(inv);
  pivots_since_refactor_ = 0;
  recompute_basic_values();
}

void BoundedSimplex::recompute_basic_values() {
  // x_B = B^-1 (b - sum over nonbasic columns at their bound values).
  std::vector<double> r = rhs_;
  for (int j = 0; j < total_; ++j) {
    if (state_[j] == VarState::Basic) continue;
    const double v = nonbasic_value(j);
    if (v == 0.0) continue;
    const SparseColumn& col = cols_[j];
    for (std::size_t t = 0; t < col.rows.size(); ++t) r[col.rows[t]] -= col.vals[t] * v;
  }
  for (int i = 0; i < m_; ++i) {
    double acc = 0.0;
    const double* row = &binv_[static_cast<std::size_t>(i) * m_];
    for (int jj = 0; jj < m_; ++jj) acc += row[jj] * r[jj];
    xb_[i] = acc;
  }
}

double BoundedSimplex::artificial_magnitude() const {
  double total = 0.0;
  for (int i = 0; i < m_; ++i) {
    const int j = artificial_index(i);
    const double v = state_[j] == VarState::Basic ? xb_[basis_pos_[j]] : nonbasic_value(j);
    total += std::abs(v);
  }
  return total;
}

BoundedSimplex::LoopExit BoundedSimplex::pivot_loop(const SimplexOptions& opt) {
  const double dj_tol = 1e-10 * cost_scale_;
  for (;;) {
    if (++iterations_ > opt.max_iterations)
      throw SolverError("simplex iteration limit exceeded (cycling safeguard)");
    if (pivots_since_refactor_ >= opt.refactor_interval) refactorize();

    // y = c_B B^-1
    std::fill(y_.begin(), y_.end(), 0.0);
    for (int i = 0; i < m_; ++i) {
      const double cb = cost_[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = &binv_[static_cast<std::size_t>(i) * m_];
      for (int jj = 0; jj < m_; ++jj) y_[jj] += cb * row[jj];
    }

    int entering = -1;
    double best_score = 0.0;
    for (int j = 0; j < total_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      if (!(lb_[j] < ub_[j])) continue;  // fixed
      const SparseColumn& col = cols_[j];
      double d = cost_[j];
      for (std::size_t t = 0; t < col.rows.size(); ++t) d -= y_[col.rows[t]] * col.vals[t];
      const bool eligible = state_[j] == VarState::AtLower ? d < -dj_tol : d > dj_tol;
      if (!eligible) continue;
      if (bland_) {
        entering = j;
        break;
      }
      const double score = std::abs(d);
      if (score > best_score) {
        best_score = score;
        entering = j;
      }
    }
    if (entering < 0) return LoopExit::Optimal;

    // dir = B^-1 A_e
    std::fill(dir_.begin(), dir_.end(), 0.0);
    {
      const SparseColumn& col = cols_[entering];
      for (std::size_t t = 0; t < col.rows.size(); ++t) {
        const double a = col.vals[t];
        const int r = col.rows[t];
        for (int i = 0; i < m_; ++i) dir_[i] += binv_[static_cast<std::size_t>(i) * m_ + r] * a;
      }
    }
    const double sign = state_[entering] == VarState::AtLower ? 1.0 : -1.0;

    // Ratio test, pass 1: smallest blocking step among basics. Rows whose
    // direction entry is below the pivot threshold still move with the step,
    // so they block too, against a half-tolerance-relaxed bound; otherwise a
    // large step leaks them past their bound (entry 1e-10 times step 1e5 is a
    // 1e-5 violation) with no candidate row ever seeing it.
    double t_min = kInf;
    for (int i = 0; i < m_; ++i) {
      const double delta = dir_[i] * sign;
      if (delta == 0.0) continue;
      const int bv = basis_[i];
      double slack, bound_mag;
      if (delta > 0.0) {
        if (lb_[bv] == -kInf) continue;
        slack = xb_[i] - lb_[bv];
        bound_mag = std::abs(lb_[bv]);
      } else {
        if (ub_[bv] == kInf) continue;
        slack = ub_[bv] - xb_[i];
        bound_mag = std::abs(ub_[bv]);
      }
      if (slack < 0.0) slack = 0.0;
      const double mag = std::abs(delta);
      const double t = mag > kPivotEps
                           ? slack / mag
                           : (slack + 0.5 * opt.feas_tol * (1.0 + bound_mag)) / mag;
      if (t < t_min) t_min = t;
    }

    const double flip_dist = ub_[entering] - lb_[entering];
    if (flip_dist <= t_min) {
      if (flip_dist == kInf) return LoopExit::Unbounded;
      // Bound flip, no basis change.
      const double step = sign * flip_dist;
      for (int i = 0; i < m_; ++i) xb_[i] -= dir_[i] * step;
      state_[entering] =
          state_[entering] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
      if (flip_dist <= kDegenerateStep) {
        if (++degenerate_streak_ > opt.degenerate_streak_for_bland) bland_ = true;
      } else {
        degenerate_streak_ = 0;
        bland_ = false;
      }
      continue;
    }
    if (t_min == kInf) return LoopExit::Unbounded;

    // Pass 2: among blocks within the tie band, take the largest pivot
    // magnitude, then the lowest row slot.
    const double tie_tol = 1e-12 * (1.0 + t_min);
    int leave = -1;
    bool leave_to_upper = false;
    double best_mag = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double delta = dir_[i] * sign;
      if (std::abs(delta) <= kPivotEps) continue;
      const int bv = basis_[i];
      double t;
      bool to_upper;
      if (delta > 0.0) {
        if (lb_[bv] == -kInf) continue;
        t = (xb_[i] - lb_[bv]) / delta;
        to_upper = false;
      } else {
        if (ub_[bv] == kInf) continue;
        t = (ub_[bv] - xb_[i]) / (-delta);
        to_upper = true;
      }
      if (t < 0.0) t = 0.0;
      if (t <= t_min + tie_tol && std::abs(delta) > best_mag) {
        best_mag = std::abs(delta);
        leave = i;
        leave_to_upper = to_upper;
      }
    }
    if (leave < 0) {
      // The binding step came from a row below the pivot threshold. A stale
      // inverse can manufacture such entries, so rebuild it once and redo the
      // iteration; on a fresh inverse, pivot on the least-bad small entry.
      if (pivots_since_refactor_ > 0) {
        refactorize();
        continue;
      }
      for (int i = 0; i < m_; ++i) {
        const double delta = dir_[i] * sign;
        if (delta == 0.0 || std::abs(delta) > kPivotEps) continue;
        const int bv = basis_[i];
        double slack, bound_mag;
        if (delta > 0.0) {
          if (lb_[bv] == -kInf) continue;
          slack = xb_[i] - lb_[bv];
          bound_mag = std::abs(lb_[bv]);
        } else {
          if (ub_[bv] == kInf) continue;
          slack = ub_[bv] - xb_[i];
          bound_mag = std::abs(ub_[bv]);
        }
        if (slack < 0.0) slack = 0.0;
        const double mag = std::abs(delta);
        const double t = (slack + 0.5 * opt.feas_tol * (1.0 + bound_mag)) / mag;
        if (t <= t_min + tie_tol && mag > best_mag) {
          best_mag = mag;
          leave = i;
          leave_to_upper = delta < 0.0;
        }
      }
      if (leave < 0) throw SolverError("ratio test failed to select a leaving variable");
    }

    const double step = sign * t_min;
    for (int i = 0; i < m_; ++i) xb_[i] -= dir_[i] * step;
    const int leaving_var = basis_[leave];
    state_[leaving_var] = leave_to_upper ? VarState::AtUpper : VarState::AtLower;
    basis_pos_[leaving_var] = -1;
    basis_[leave] = entering;
    basis_pos_[entering] = leave;
    state_[entering] = VarState::Basic;
    xb_[leave] = sign > 0.0 ? lb_[entering] + t_min : ub_[entering] - t_min;

    // Product-form update of B^-1 with the pivot row used before scaling.
    const double piv = dir_[leave];
    double* prow = &binv_[static_cast<std::size_t>(leave) * m_];
    for (int i = 0; i < m_; ++i) {
      if (i == leave) continue;
      const double f = dir_[i] / piv;
      if (f == 0.0) continue;
      double* row = &binv_[static_cast<std::size_t>(i) * m_];
      for (int jj = 0; jj < m_; ++jj) row[jj] -= f * prow[jj];
    }
    for (int jj = 0; jj < m_; ++jj) prow[jj] /= piv;
    ++pivots_since_refactor_;

    if (t_min <= kDegenerateStep) {
      if (++degenerate_streak_ > opt.degenerate_streak_for_bland) bland_ = true;
    } else {
      degenerate_streak_ = 0;
      bland_ = false;
    }
  }
}

LpSolution BoundedSimplex::solve(std::span<const double> struct_lb,
                                 std::span<const double> struct_ub,
                                 const SimplexOptions& opt) {
  // Product-form updates lose accuracy over long pivot runs; when the exit
  // verification catches that, redo the solve with more frequent
  // refactorization. Each attempt is deterministic, so the ladder is too.
  const int cadences[3] = {opt.refactor_interval, std::min(opt.refactor_interval, 10), 1};
  for (int i = 0; i < 3; ++i) {
    if (i > 0 && cadences[i] >= cadences[i - 1]) continue;
    SimplexOptions attempt = opt;
    attempt.refactor_interval = cadences[i];
    try {
      return solve_once(struct_lb, struct_ub, attempt);
    } catch (const SolverError&) {
      if (cadences[i] <= 1) throw;
    }
  }
  return solve_once(struct_lb, struct_ub, opt);
}

LpSolution BoundedSimplex::solve_once(std::span<const double> struct_lb,
                                      std::span<const double> struct_ub,
                                      const SimplexOptions& opt) {
  warm_ready_ = false;
  if (static_cast<int>(struct_lb.size()) != n_ || static_cast<int>(struct_ub.size()) != n_)
    throw DimensionError("bound arrays do not match variable count");

  LpSolution sol;
  for (int j = 0; j < n_; ++j) {
    if (struct_lb[j] > struct_ub[j]) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
  }

  lb_.assign(total_, 0.0);
  ub_.assign(total_, 0.0);
  cost_.assign(total_, 0.0);
  state_.assign(total_, VarState::AtLower);
  basis_.assign(m_, -1);
  basis_pos_.assign(total_, -1);
  binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
  xb_.assign(m_, 0.0);
  y_.assign(m_, 0.0);
  dir_.assign(m_, 0.0);
  iterations_ = 0;
  pivots_since_refactor_ = 0;
  degenerate_streak_ = 0;
  bland_ = false;

  for (int j = 0; j < n_; ++j) {
    lb_[j] = struct_lb[j];
    ub_[j] = struct_ub[j];
    state_[j] = VarState::AtLower;
  }
  for (int i = 0; i < m_; ++i) {
    const int s = slack_index(i);
    switch (program_->constraints[i].rel) {
      case Relation::LessEq:
        lb_[s] = 0.0;
        ub_[s] = kInf;
        state_[s] = VarState::AtLower;
        break;
      case Relation::GreaterEq:
        lb_[s] = -kInf;
        ub_[s] = 0.0;
        state_[s] = VarState::AtUpper;
        break;
      case Relation::Equal:
        lb_[s] = 0.0;
        ub_[s] = 0.0;
        state_[s] = VarState::AtLower;
        break;
    }
  }

  // Residuals with every nonbasic variable parked at its initial bound.
  std::vector<double> residual = rhs_;
  for (int j = 0; j < n_ + m_; ++j) {
    const double v = nonbasic_value(j);
    if (v == 0.0) continue;
    const SparseColumn& col = cols_[j];
    for (std::size_t t = 0; t < col.rows.size(); ++t)
      residual[col.rows[t]] -= col.vals[t] * v;
  }

  // Rows whose slack can hold the residual start with the slack basic; the
  // rest get their artificial, signed to contain the residual.
  bool need_phase1 = false;
  for (int i = 0; i < m_; ++i) {
    const int s = slack_index(i);
    const int a = artificial_index(i);
    const double r = residual[i];
    const bool slack_holds = r >= lb_[s] && r <= ub_[s];
    if (slack_holds) {
      basis_[i] = s;
      basis_pos_[s] = i;
      state_[s] = VarState::Basic;
      lb_[a] = 0.0;
      ub_[a] = 0.0;
      state_[a] = VarState::AtLower;
    } else {
      basis_[i] = a;
      basis_pos_[a] = i;
      state_[a] = VarState::Basic;
      if (r >= 0.0) {
        lb_[a] = 0.0;
        ub_[a] = kInf;
        cost_[a] = 1.0;
      } else {
        lb_[a] = -kInf;
        ub_[a] = 0.0;
        cost_[a] = -1.0;
      }
      need_phase1 = true;
    }
    xb_[i] = r;
  }
  for (int i = 0; i < m_; ++i) binv_[static_cast<std::size_t>(i) * m_ + i] = 1.0;

  if (need_phase1) {
    cost_scale_ = 1.0;
    pivot_loop(opt);  // bounded below by zero, cannot be unbounded
    double rhs_scale = 1.0;
    for (int i = 0; i < m_; ++i) rhs_scale = std::max(rhs_scale, std::abs(rhs_[i]));
    if (artificial_magnitude() > opt.feas_tol * rhs_scale) {
      sol.status = LpStatus::Infeasible;
      sol.iterations = iterations_;
      return sol;
    }
    // The sum test above scales with the largest rhs, which can bless a
    // residual that is huge for its own row. Each row must also clear the
    // tolerance the exit verification will hold it to.
    for (int i = 0; i < m_; ++i) {
      const int a = artificial_index(i);
      if (state_[a] != VarState::Basic) continue;
      if (std::abs(xb_[basis_pos_[a]]) > opt.feas_tol * (1.0 + std::abs(rhs_[i]))) {
        sol.status = LpStatus::Infeasible;
        sol.iterations = iterations_;
        return sol;
      }
    }
  }
  // Pin artificials so phase 2 cannot reuse them.
  for (int i = 0; i < m_; ++i) {
    const int a = artificial_index(i);
    lb_[a] = 0.0;
    ub_[a] = 0.0;
    cost_[a] = 0.0;
  }

  cost_scale_ = 1.0;
  for (int j = 0; j < n_; ++j) {
    cost_[j] = program_->objective[j];
    cost_scale_ = std::max(cost_scale_, std::abs(cost_[j]));
  }
  const LoopExit exit = pivot_loop(opt);
  sol.iterations = iterations_;
  if (exit == LoopExit::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  return extract_and_verify(opt, /*force_refresh=*/true);
}

LpSolution BoundedSimplex::extract_and_verify(const SimplexOptions& opt, bool force_refresh) {
  // A nearly fresh inverse (a handful of product updates) is accurate enough
  // to report from; the checks below gate the result either way.
  if (m_ > 0 && (force_refresh || pivots_since_refactor_ > 20)) refactorize();
  LpSolution sol;
  sol.iterations = iterations_;
  sol.x.assign(n_, 0.0);
  for (int j = 0; j < n_; ++j)
    sol.x[j] = state_[j] == VarState::Basic ? xb_[basis_pos_[j]] : nonbasic_value(j);

  // Row and bound check against the original program.
  for (int j = 0; j < n_; ++j) {
    const double tol = opt.feas_tol * (1.0 + std::abs(sol.x[j]));
    if (sol.x[j] < lb_[j] - tol || sol.x[j] > ub_[j] + tol)
      throw SolverError("solution drifted outside variable bounds");
  }
  for (int i = 0; i < m_; ++i) {
    const LinearConstraint& c = program_->constraints[i];
    double act = 0.0;
    for (int j = 0; j < n_; ++j) act += c.coeffs[j] * sol.x[j];
    const double tol = opt.feas_tol * (1.0 + std::abs(c.rhs));
    const bool ok = c.rel == Relation::LessEq    ? act <= c.rhs + tol
                    : c.rel == Relation::GreaterEq ? act >= c.rhs - tol
                                                   : std::abs(act - c.rhs) <= tol;
    if (!ok) throw SolverError("solution violates a constraint row after solve");
  }

  double obj = 0.0;
  for (int j = 0; j < n_; ++j) obj += program_->objective[j] * sol.x[j];
  sol.objective = obj;
  sol.status = LpStatus::Optimal;
  warm_ready_ = true;
  return sol;
}

LpSolution BoundedSimplex::resolve(std::span<const double> struct_lb,
                                   std::span<const double> struct_ub,
                                   const SimplexOptions& opt) {
  if (!warm_ready_) return solve(struct_lb, struct_ub, opt);
  warm_ready_ = false;
  try {
    return resolve_once(struct_lb, struct_ub, opt);
  } catch (const SolverError&) {
    return solve(struct_lb, struct_ub, opt);
  }
}

LpSolution BoundedSimplex::resolve_once(std::span<const double> struct_lb,
                                        std::span<const double> struct_ub,
                                        const SimplexOptions& opt) {
  if (static_cast<int>(struct_lb.size()) != n_ || static_cast<int>(struct_ub.size()) != n_)
    throw DimensionError("bound arrays do not match variable count");
  LpSolution sol;
  for (int j = 0; j < n_; ++j) {
    if (struct_lb[j] > struct_ub[j]) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
  }

  // Costs, slack boxes, basis, and inverse all survive from the previous
  // solve; only the structural boxes move. The old basis stays dual feasible
  // because reduced costs do not depend on bounds.
  iterations_ = 0;
  degenerate_streak_ = 0;
  bland_ = false;
  for (int j = 0; j < n_; ++j) {
    lb_[j] = struct_lb[j];
    ub_[j] = struct_ub[j];
  }
  recompute_basic_values();

  // Reduced costs d = c - y A for the warm basis.
  std::fill(y_.begin(), y_.end(), 0.0);
  for (int i = 0; i < m_; ++i) {
    const double cb = cost_[basis_[i]];
    if (cb == 0.0) continue;
    const double* row = &binv_[static_cast<std::size_t>(i) * m_];
    for (int jj = 0; jj < m_; ++jj) y_[jj] += cb * row[jj];
  }
  d_.assign(total_, 0.0);
  for (int j = 0; j < total_; ++j) {
    if (state_[j] == VarState::Basic) continue;
    const SparseColumn& col = cols_[j];
    double dd = cost_[j];
    for (std::size_t t = 0; t < col.rows.size(); ++t) dd -= y_[col.rows[t]] * col.vals[t];
    d_[j] = dd;
  }
  alpha_.assign(total_, 0.0);

  if (dual_pivot_loop(opt) == DualExit::Infeasible) {
    sol.status = LpStatus::Infeasible;
    sol.iterations = iterations_;
    warm_ready_ = true;  // the abandoned basis is still a valid dual start
    return sol;
  }

  // Exact pricing cleans up any drift the incremental duals picked up and
  // certifies optimality; usually zero pivots.
  const LoopExit exit = pivot_loop(opt);
  sol.iterations = iterations_;
  if (exit == LoopExit::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  return extract_and_verify(opt, /*force_refresh=*/false);
}

BoundedSimplex::DualExit BoundedSimplex::dual_pivot_loop(const SimplexOptions& opt) {
  // A warm restart rarely needs more pivots than rows; well past that, the
  // cold path is cheaper than flailing on.
  const int pivot_cap = 2 * m_ + 50;
  int pivots = 0;
  for (;;) {
    if (++iterations_ > opt.max_iterations)
      throw SolverError("simplex iteration limit exceeded (cycling safeguard)");
    if (pivots_since_refactor_ >= opt.refactor_interval) refactorize();

    // Leaving row: the largest bound violation among basic variables.
    int r = -1;
    bool to_lower = false;
    double worst = 0.0;
    for (int i = 0; i < m_; ++i) {
      const int bv = basis_[i];
      const double below = lb_[bv] - xb_[i];
      const double above = xb_[i] - ub_[bv];
      if (below > opt.feas_tol * (1.0 + std::abs(lb_[bv])) && below > worst) {
        worst = below;
        r = i;
        to_lower = true;
      }
      if (above > opt.feas_tol * (1.0 + std::abs(ub_[bv])) && above > worst) {
        worst = above;
        r = i;
        to_lower = false;
      }
    }
    if (r < 0) return DualExit::Feasible;
    if (++pivots > pivot_cap) throw SolverError("dual restart exceeded its pivot budget");

    // Pivot row alpha_j = (B^-1 A)_rj for nonbasic j; binv_ is row-major, so
    // row r of the inverse is ready to use.
    const double* beta = &binv_[static_cast<std::size_t>(r) * m_];
    for (int j = 0; j < total_; ++j) {
      if (state_[j] == VarState::Basic) {
        alpha_[j] = 0.0;
        continue;
      }
      const SparseColumn& col = cols_[j];
      double a = 0.0;
      for (std::size_t t = 0; t < col.rows.size(); ++t) a += beta[col.rows[t]] * col.vals[t];
      alpha_[j] = a;
    }

    // Entering column: sign-compatible with pushing the leaving value back
    // toward its bound, smallest dual ratio |d|/|alpha|; ties by largest
    // |alpha| then lowest index. No candidate at all means the violated row
    // cannot be repaired and the program is infeasible.
    int entering = -1;
    double best_ratio = 0.0;
    double best_mag = 0.0;
    for (int j = 0; j < total_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      if (!(lb_[j] < ub_[j])) continue;  // fixed columns cannot move
      const double a = alpha_[j];
      if (std::abs(a) <= kPivotEps) continue;
      // Leaving below its lower bound: xb_[r] must rise, so entries moving up
      // from a lower bound need alpha < 0 and entries moving down from an
      // upper bound need alpha > 0; mirrored when leaving above.
      const bool at_lower = state_[j] == VarState::AtLower;
      const bool compatible =
          to_lower ? (at_lower ? a < 0.0 : a > 0.0) : (at_lower ? a > 0.0 : a < 0.0);
      if (!compatible) continue;
      double num = at_lower ? d_[j] : -d_[j];
      if (num < 0.0) num = 0.0;  // sub-tolerance dual wobble
      const double ratio = num / std::abs(a);
      const double tie = 1e-12 * (1.0 + best_ratio);
      if (entering < 0 || ratio < best_ratio - tie ||
          (ratio <= best_ratio + tie && std::abs(a) > best_mag)) {
        entering = j;
        best_ratio = ratio;
        best_mag = std::abs(a);
      }
    }
    if (entering < 0) {
      // Do not declare infeasibility off a sub-threshold pivot candidate; let
      // the cold path rule on it from scratch.
      for (int j = 0; j < total_; ++j) {
        if (state_[j] == VarState::Basic || !(lb_[j] < ub_[j])) continue;
        const double a = alpha_[j];
        if (a == 0.0 || std::abs(a) > kPivotEps) continue;
        const bool at_lower = state_[j] == VarState::AtLower;
        const bool compatible =
            to_lower ? (at_lower ? a < 0.0 : a > 0.0) : (at_lower ? a > 0.0 : a < 0.0);
        if (compatible) throw SolverError("dual pivot blocked by a tiny column entry");
      }
      return DualExit::Infeasible;
    }

    // Primal step lands the leaving variable exactly on its violated bound. A
    // step past the entering variable's own range would need a mid-pivot
    // bound flip; that case is rare here, so hand it to the cold path.
    const int leaving_var = basis_[r];
    const double target = to_lower ? lb_[leaving_var] : ub_[leaving_var];
    const double step = (xb_[r] - target) / alpha_[entering];
    if (std::abs(step) > ub_[entering] - lb_[entering] + opt.feas_tol)
      throw SolverError("dual step exceeds the entering variable's range");

    // dir = B^-1 A_e, then the usual primal update.
    std::fill(dir_.begin(), dir_.end(), 0.0);
    {
      const SparseColumn& col = cols_[entering];
      for (std::size_t t = 0; t < col.rows.size(); ++t) {
        const double a = col.vals[t];
        const int rr = col.rows[t];
        for (int i = 0; i < m_; ++i) dir_[i] += binv_[static_cast<std::size_t>(i) * m_ + rr] * a;
      }
    }
    const double enter_from = nonbasic_value(entering);
    for (int i = 0; i < m_; ++i) xb_[i] -= dir_[i] * step;
    xb_[r] = enter_from + step;

    // Dual step theta zeroes the entering reduced cost; the ratio test chose
    // theta small enough to keep every other column dual feasible.
    const double theta = d_[entering] / alpha_[entering];
    for (int j = 0; j < total_; ++j) {
      if (state_[j] == VarState::Basic || j == entering) continue;
      d_[j] -= theta * alpha_[j];
    }
    d_[leaving_var] = -theta;
    d_[entering] = 0.0;

    state_[leaving_var] = to_lower ? VarState::AtLower : VarState::AtUpper;
    basis_pos_[leaving_var] = -1;
    basis_[r] = entering;
    basis_pos_[entering] = r;
    state_[entering] = VarState::Basic;

    // Product-form update of B^-1 with the pivot row used before scaling.
    const double piv = dir_[r];
    double* prow = &binv_[static_cast<std::size_t>(r) * m_];
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = dir_[i] / piv;
      if (f == 0.0) continue;
      double* row = &binv_[static_cast<std::size_t>(i) * m_];
      for (int jj = 0; jj < m_; ++jj) row[jj] -= f * prow[jj];
    }
    for (int jj = 0; jj < m_; ++jj) prow[jj] /= piv;
    ++pivots_since_refactor_;
  }
}

void BoundedSimplex::structural_reduced_costs(std::vector<double>& d,
                                              std::vector<int>& rest) const {
  d.assign(n_, 0.0);
  rest.assign(n_, 0);
  std::vector<double> y(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    const double cb = cost_[basis_[i]];
    if (cb == 0.0) continue;
    const double* row = &binv_[static_cast<std::size_t>(i) * m_];
    for (int jj = 0; jj < m_; ++jj) y[jj] += cb * row[jj];
  }
  for (int j = 0; j < n_; ++j) {
    if (state_[j] == VarState::Basic) continue;
    const SparseColumn& col = cols_[j];
    double dd = cost_[j];
    for (std::size_t t = 0; t < col.rows.size(); ++t) dd -= y[col.rows[t]] * col.vals[t];
    d[j] = dd;
    rest[j] = state_[j] == VarState::AtLower ? -1 : 1;
  }
}

}  // namespace rotshed::detail

namespace rotshed {

LpSolution solve_lp(const IntegerLinearProgram& program, const SimplexOptions& options) {
  detail::BoundedSimplex simplex(program);
  std::vector<double> lb(program.lower.begin(), program.lower.end());
  std::vector<double> ub(program.upper.begin(), program.upper.end());
  return simplex.solve(lb, ub, options);
}

}  // namespace rotshed
