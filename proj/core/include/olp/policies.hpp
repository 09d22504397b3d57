#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olp/schedules.hpp"
#include "olp/types.hpp"

namespace olp {

enum class PolicyKind { Air, AirKp, Afr, Ada, AdaKp, Sfa, Dld, Buf };

/// Stable names used by the CLI and configs: "air", "air-kp", "afr", "ada",
/// "ada-kp", "sfa", "dld", "buf".
PolicyKind policy_from_name(std::string_view name);
std::string_view policy_name(PolicyKind kind);
bool policy_uses_schedule(PolicyKind kind);
bool policy_is_randomized(PolicyKind kind);

/// One accept/reject decision. acceptance_probability is the Bernoulli
/// parameter actually used: 1 or 0 for deterministic policies.
struct Decision {
  bool accept = false;
  bool resolved_this_period = false;
  double acceptance_probability = 0.0;
};

/// Per-path mutable state shared by all policies. The dual-descent policies
/// use the price vectors; the plan vectors u/d matter only to the argmax
/// policies. Fields follow the step functions' contracts below.
struct PolicyState {
  Vec b;                       // remaining inventory, length m
  Vec u;                       // acceptance plan, length n
  Vec d;                       // demand estimate, length n (may go negative)
  std::vector<long long> N;    // arrival counts through t-1
  long long t = 1;             // current period
  long long lp_solves = 0;

  Vec q;                        // dual prices (SFA, BUF, and DLD decision dual)
  Vec q_learn;                  // DLD learning dual
  long long last_budget_update = 1;          // BUF's l
  Vec d_rate;                                // BUF per-period budget target
  std::vector<long long> budget_times;       // BUF internal update periods
  long long dld_exploration_end = 0;         // T_e = floor(T^{2/3})
  double dld_step_explore = 0.0;             // alpha_e = T^{-1/3}
  double dld_step_exploit = 0.0;             // alpha_p = T^{-2/3}
};

/// Optional deviations from the default step rules. The appendix versions of
/// SFA and DLD accept any feasible request without consulting the dual-price
/// threshold; literal_dual_accept restores that behavior for comparison.
struct PolicyOptions {
  bool literal_dual_accept = false;
};

PolicyState make_policy_state(const Instance& instance, PolicyKind kind);

/// BUF's budget refresh periods {T - ceil(T/2^k) : k = 1..ceil(log2 T)}.
std::vector<long long> buf_budget_update_times(long long T);

// Step functions: called once per period with the observed arrival type
// (0-based). Each advances state.t and updates all bookkeeping.

/// Argmax with infrequent resolving. At a scheduled period the fluid LP is
/// resolved with the empirical probability estimate; between resolves the
/// plan u and demand estimate d are decremented in first order. Accept iff
/// the request is feasible, u_j > 1 and u_j >= d_j - u_j.
Decision air_step(const Instance& instance, const Schedule& schedule, PolicyState& state,
                  std::size_t arrival);

/// AIR with the true arrival probabilities in place of estimates.
Decision air_kp_step(const Instance& instance, const Schedule& schedule, PolicyState& state,
                     std::size_t arrival);

/// Argmax with a fresh LP solve every period.
Decision afr_step(const Instance& instance, PolicyState& state, std::size_t arrival);

/// Probabilistic allocation with per-period resolving: accept a feasible
/// type-j request with probability y*_j / ((T-t+1) p_hat_j), taken as 0 when
/// the estimate is 0. coin is a uniform [0,1) draw.
Decision ada_step(const Instance& instance, PolicyState& state, std::size_t arrival, double coin);

/// ADA with known probabilities (per-period resolving benchmark).
Decision ada_kp_step(const Instance& instance, PolicyState& state, std::size_t arrival,
                     double coin);

/// Subgradient dual pricing with stepsize 1/sqrt(t); no LP solves.
Decision sfa_step(const Instance& instance, PolicyState& state, std::size_t arrival,
                  const PolicyOptions& options = {});

/// Decoupled learning/decision duals: learning dual runs stepsize 1/t until
/// T_e and is handed to the decision dual at T_e + 1.
Decision dld_step(const Instance& instance, PolicyState& state, std::size_t arrival,
                  const PolicyOptions& options = {});

/// Dual pricing against a budget target refreshed at doubling points; the
/// price update is deliberately unprojected.
Decision buf_step(const Instance& instance, PolicyState& state, std::size_t arrival);

}  // namespace olp
