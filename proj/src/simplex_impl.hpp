#pragma once

// Bounded-variable simplex over the equality form A*x + s = b.
// Columns are sparse; the basis inverse is dense and rebuilt every
// refactor_interval pivots. Cold solves run primal simplex: phase 1 drives
// artificial columns (one per row, used only when the row's slack cannot
// absorb the initial residual) to zero magnitude, phase 2 optimizes the real
// objective. Re-solves after a bound change reuse the previous terminal
// basis, which stays dual feasible when only bounds move, so a short dual
// simplex run restores primal feasibility orders of magnitude faster than a
// cold solve. All tie-breaks are by lowest index, so identical inputs replay
// identical pivot sequences.

#include <span>
#include <vector>

#include "rotshed/ilp.hpp"

namespace rotshed::detail {

struct SparseColumn {
  std::vector<int> rows;
  std::vector<double> vals;
};

class BoundedSimplex {
 public:
  explicit BoundedSimplex(const IntegerLinearProgram& program);

  // Solves the continuous relaxation with the given structural bounds. When
  // the answer fails the exit verification (inverse drift over a long pivot
  // run), the solve is repeated with a tighter refactorization cadence before
  // giving up.
  LpSolution solve(std::span<const double> struct_lb, std::span<const double> struct_ub,
                   const SimplexOptions& options);

  // Solves with new structural bounds starting from the terminal basis of the
  // previous successful solve on this object (dual simplex). Falls back to a
  // cold solve() when no warm basis is available or the warm path hits
  // numerical trouble, so the result contract matches solve().
  LpSolution resolve(std::span<const double> struct_lb, std::span<const double> struct_ub,
                     const SimplexOptions& options);

  // After an Optimal solve: reduced cost of each structural variable in the
  // terminal basis (recomputed exactly, 0 for basic columns) and the side it
  // rests on (-1 lower, +1 upper, 0 basic). Feeds reduced-cost box tightening
  // once an incumbent exists.
  void structural_reduced_costs(std::vector<double>& d, std::vector<int>& rest) const;

  int num_structural() const { return n_; }

 private:
  enum class VarState : unsigned char { AtLower, AtUpper, Basic };
  enum class LoopExit { Optimal, Unbounded };
  enum class DualExit { Feasible, Infeasible };

  LpSolution solve_once(std::span<const double> struct_lb, std::span<const double> struct_ub,
                        const SimplexOptions& options);
  LpSolution resolve_once(std::span<const double> struct_lb, std::span<const double> struct_ub,
                          const SimplexOptions& options);
  LpSolution extract_and_verify(const SimplexOptions& options, bool force_refresh);
  DualExit dual_pivot_loop(const SimplexOptions& opt);

  int slack_index(int row) const { return n_ + row; }
  int artificial_index(int row) const { return n_ + m_ + row; }
  bool is_artificial(int j) const { return j >= n_ + m_; }

  double nonbasic_value(int j) const;
  void refactorize();
  void recompute_basic_values();
  LoopExit pivot_loop(const SimplexOptions& opt);
  double artificial_magnitude() const;

  const IntegerLinearProgram* program_ = nullptr;
  int n_ = 0;      // structural variables
  int m_ = 0;      // rows
  int total_ = 0;  // structural + slack + artificial
  std::vector<SparseColumn> cols_;
  std::vector<double> rhs_;

  // Per-solve state.
  std::vector<double> lb_, ub_, cost_;
  std::vector<VarState> state_;
  std::vector<int> basis_;         // m_ entries, column basic in each row slot
  std::vector<int> basis_pos_;     // total_ entries, row slot or -1
  std::vector<double> binv_;       // m_ x m_, row-major
  std::vector<double> xb_;         // values of basic variables
  std::vector<double> y_, dir_;    // pricing / ftran scratch
  std::vector<double> d_, alpha_;  // dual loop: reduced costs, pivot row
  double cost_scale_ = 1.0;
  long long iterations_ = 0;
  int pivots_since_refactor_ = 0;
  int degenerate_streak_ = 0;
  bool bland_ = false;
  bool warm_ready_ = false;        // terminal basis valid for a dual restart
};

}  // namespace rotshed::detail
