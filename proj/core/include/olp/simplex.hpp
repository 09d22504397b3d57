#pragma once

#include <cstdint>
#include <vector>

#include "olp/types.hpp"

namespace olp {

/// Variable status in the bounded-variable simplex.
enum class VarStatus : std::uint8_t { Basic, AtLower, AtUpper };

/// Output of one simplex solve of
///     max c'x   s.t.  G x <= h,  0 <= x <= upper,
/// where upper_j may be +infinity. row_duals are the multipliers of the
/// G x <= h rows, bound_duals the multipliers of x <= upper; both are
/// nonnegative at optimality. basis/status describe the final basic
/// solution and can seed a warm start on a related problem.
struct SimplexSolution {
  Vec x;
  double objective = 0.0;
  Vec row_duals;
  Vec bound_duals;
  std::vector<int> basis;
  std::vector<VarStatus> status;  // size n + m (structurals then slacks)
  int iterations = 0;
};

/// Dense primal simplex on the bounded-variable formulation with Bland's
/// rule for anti-cycling. Problems here are tiny, so the full tableau
/// B^{-1}[G I] is kept explicitly and refreshed by ordinary pivots.
///
/// The default start (all structurals at lower bound, slacks basic)
/// requires h >= 0 so it is primal feasible; h must be nonnegative unless
/// a feasible warm start is supplied.
class BoundedSimplex {
 public:
  BoundedSimplex(const Matrix& G, Vec h, Vec c, Vec upper);

  /// Solve from the all-at-lower start. Requires h >= 0.
  SimplexSolution solve();

  /// Solve from a caller-provided primal feasible basis/status pair,
  /// e.g. one carried over from a previous solve with one extra row.
  SimplexSolution solve_from(const std::vector<int>& basis, const std::vector<VarStatus>& status);

  static constexpr double kTol = 1e-9;  // pivot / reduced-cost / bound tolerance

 private:
  SimplexSolution run();
  void rebuild_tableau();
  void compute_basic_values();

  std::size_t m_, n_;   // rows, structural variables
  std::size_t nv_;      // n_ + m_ total variables
  Matrix G_;
  Vec h_, c_, upper_;   // upper_ has size nv_ (slack bounds are +inf)
  std::vector<double> tab_;  // m_ x nv_, row-major: B^{-1}[G I]
  Vec xb_;                   // basic variable values
  std::vector<int> basis_;
  std::vector<VarStatus> status_;
};

}  // namespace olp
