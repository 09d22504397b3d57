#pragma once

#include "olp/simplex.hpp"
#include "olp/types.hpp"

namespace olp {

enum class LpStatus { Optimal, InfeasibleInput };

/// Optimal basic solution of the inventory/demand-parameterized LP
///     phi(b, d) = max r'y  s.t.  A y <= b,  0 <= y <= d.
/// duals holds the m row multipliers followed by the n demand-bound
/// multipliers; together with the primal they form an optimality
/// certificate (feasibility + complementary slackness).
struct LpSolution {
  Vec primal;
  double objective = 0.0;
  Vec duals;  // length m + n
  LpStatus status = LpStatus::Optimal;
};

/// Relative optimality / feasibility tolerances used throughout.
inline constexpr double kLpFeasTol = 1e-9;
inline constexpr double kLpObjRelTol = 1e-7;

/// Solve phi(b, d). Negative demand components are clamped to zero first
/// (first-order demand updates can push d below zero; y <= d with d < 0
/// would be infeasible, and the intended meaning is "no remaining demand").
/// Deterministic: identical inputs give bitwise-identical outputs.
/// Throws InputError on dimension mismatch or non-finite input.
LpSolution solve_fluid(const Instance& instance, const Vec& b, const Vec& d);

/// Largest value of y_j over all optimal solutions of phi(b, d), computed
/// by a second LP  max y_j  s.t.  r'y >= phi - 1e-9(1+|phi|), Ay <= b,
/// 0 <= y <= d, warm-started from the phi basis. j is a 0-based type index.
double max_coord_over_optima(const Instance& instance, const Vec& b, const Vec& d, std::size_t j);

/// Same probe but returning the attaining point as well (diagnostics).
struct MaxCoordResult {
  double value = 0.0;
  Vec attaining;  // optimal-face point with y_j == value
};
MaxCoordResult max_coord_point(const Instance& instance, const Vec& b, const Vec& d, std::size_t j);

/// Verify primal feasibility, dual feasibility, complementary slackness and
/// strong duality of a solution at the given tolerance.
bool satisfies_optimality_certificate(const Instance& instance, const Vec& b, const Vec& d,
                                      const LpSolution& sol, double tol);

}  // namespace olp
