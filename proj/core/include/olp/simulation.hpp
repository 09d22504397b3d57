#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "olp/policies.hpp"
#include "olp/schedules.hpp"
#include "olp/types.hpp"

namespace olp {

/// One realized arrival sequence. counts[j] is the number of type-j arrivals
/// over the whole horizon.
struct SamplePath {
  std::vector<std::int32_t> arrivals;  // length T, 0-based type indices
  std::uint64_t seed = 0;
  std::vector<long long> counts;  // length n
};

/// Draw a T-period i.i.d. path by inverse CDF over the cumulative type
/// probabilities. Identical (instance, seed) give bitwise-identical paths.
SamplePath sample_path(const Instance& instance, std::uint64_t seed);

/// Offline benchmark: the fluid LP fed the realized arrival counts,
/// phi(T rho, Z). Upper-bounds every non-anticipative policy's revenue on
/// the same path.
double hindsight_value(const Instance& instance, const SamplePath& path);

/// Full parameterization of one policy run: which policy, which resolving
/// schedule (for the schedule-driven ones) and the schedule's parameters.
struct PolicySpec {
  PolicyKind kind = PolicyKind::Air;
  std::optional<ScheduleKind> schedule;  // defaulted per policy when unset
  double alpha = 0.7;
  double beta = 0.7;
  double epsilon = 0.01;
  int M = 3;
  long long omega = 1;
  bool literal_dual_accept = false;

  /// Stable label carrying the name and every parameter that matters,
  /// e.g. "air(alpha=0.7,beta=0.7)".
  std::string label() const;
};

/// Build the resolving schedule a spec asks for at horizon T; nullopt for
/// policies that never resolve on a schedule.
std::optional<Schedule> make_schedule(const PolicySpec& spec, long long T);

/// Outcome of one policy run over one path.
struct RunResult {
  double revenue = 0.0;
  std::vector<long long> accepted;  // per-type acceptance counts
  Vec final_inventory;
  long long lp_solves = 0;
  std::vector<Decision> decision_trace;  // filled only when requested
  double wall_time = 0.0;                // seconds
};

/// Run a policy over a sampled path. schedule is required for air/air-kp and
/// ignored otherwise; decision_seed feeds the policy's private coin stream.
RunResult run_policy(const PolicySpec& spec, const Instance& instance,
                     const Schedule* schedule, const SamplePath& path,
                     std::uint64_t decision_seed, bool record_trace = false);

/// Monte-Carlo summary over n_sims common-random-number paths.
struct RegretEstimate {
  double mean_hindsight = 0.0;
  double mean_revenue = 0.0;
  double mean_regret = 0.0;
  double std_error = 0.0;
  long long n_sims = 0;
  double mean_lp_solves = 0.0;
  double total_wall_time = 0.0;  // seconds
};

struct SimOptions {
  int threads = 0;  // 0: one worker per hardware thread
};

/// Estimate E[hindsight - revenue] with per-path seeds split off base_seed,
/// so the estimate is bit-stable no matter how many workers run. Path i uses
/// seed split(base_seed, i); its decision stream uses split(path_seed, 1).
RegretEstimate estimate_regret(const PolicySpec& spec, const Instance& instance,
                               long long n_sims, std::uint64_t base_seed,
                               const SimOptions& options = {});

/// Evaluate several policies on the same path set (common random numbers);
/// output order matches input order.
std::vector<RegretEstimate> compare_policies(std::span<const PolicySpec> specs,
                                             const Instance& instance, long long n_sims,
                                             std::uint64_t base_seed,
                                             const SimOptions& options = {});

/// Count of paths ever observed with revenue > hindsight + 1e-9. Any nonzero
/// value is a bug; the acceptance suite asserts this stays zero.
long long hindsight_violation_count();

/// Sum in a fixed pairwise order; associativity-stable across worker counts.
double pairwise_sum(std::span<const double> values);

}  // namespace olp
