#pragma once

#include <string>
#include <vector>

#include "olp/types.hpp"

namespace olp {

enum class ScheduleKind {
  LearningApprox,    // learning set + midpoint + approximation set
  FiniteM,           // M-resolve variant, unknown probabilities
  KnownProb,         // {1} + approximation set
  KnownProbFiniteM,  // {1} + first M-1 approximation points
  Periodic,
  MidpointKp,
  MidpointFull,
  Custom,
};

/// Sorted, duplicate-free set of resolving periods within [1, T].
struct Schedule {
  std::vector<long long> times;
  ScheduleKind kind = ScheduleKind::Custom;

  std::size_t size() const { return times.size(); }
  bool contains(long long t) const;
  /// Ascending comma-separated list, e.g. "3,4,7,15".
  std::string to_string() const;
};

/// Number of learning resolves K = ceil(log_{1/x} log_3 T); shared by the
/// learning and approximation sets.
int loglog_count(long long T, double x);

/// T^{a^k} early + T/2 midpoint + T - T^{b^k} late, k up to the log-log
/// counts. Powers are evaluated in double precision with ceiling applied
/// last; requires T >= 9 so both counts are at least one.
Schedule learning_approx_schedule(long long T, double alpha, double beta);

/// M-resolve schedule {ceil(T^{(1/2+eps)b^{M-2}}), ceil(T/2)} plus the
/// first M-2 late points T - T^{b^k}.
Schedule finite_schedule(long long T, int M, double beta, double epsilon);

/// {1} plus the full late set, for the known-probability case.
Schedule known_prob_schedule(long long T, double beta);

/// {1} plus the first M-1 late points.
Schedule known_prob_finite_schedule(long long T, int M, double beta);

/// {1, 1+w, 1+2w, ...} up to T.
Schedule periodic_schedule(long long T, long long omega);

/// {1} + {ceil(T - T/2^k)}; with_learning additionally prepends the halving
/// points {ceil(T/2^k) : k >= 2}.
Schedule midpoint_schedule(long long T, bool with_learning);

/// Validated custom schedule (sorted, deduplicated, all within [1, T]).
Schedule custom_schedule(std::vector<long long> times, long long T);

/// ceil with a 1-ulp guard: values within 1e-9 of an integer are taken as
/// that integer before rounding up, so representation error in pow cannot
/// shift a period by one.
long long guarded_ceil(double x);

/// floor with the same 1-ulp guard.
long long guarded_floor(double x);

}  // namespace olp
