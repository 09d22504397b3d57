#include "olp/simulation.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "olp/lp.hpp"
#include "olp/rng.hpp"

namespace olp {

namespace {

std::atomic<long long> g_hindsight_violations{0};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

SamplePath sample_path(const Instance& instance, std::uint64_t seed) {
  instance.validate();
  const std::size_t n = instance.num_types();
  Vec cdf(n);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += instance.probabilities[j];
    cdf[j] = acc;
  }

  SamplePath path;
  path.seed = seed;
  path.arrivals.resize(static_cast<std::size_t>(instance.horizon));
  path.counts.assign(n, 0);
  SplitMix64 rng(seed);
  for (auto& a : path.arrivals) {
    const double u = rng.next_double();
    std::size_t j = 0;
    while (j + 1 < n && u >= cdf[j]) ++j;
    a = static_cast<std::int32_t>(j);
    ++path.counts[j];
  }
  return path;
}

double hindsight_value(const Instance& instance, const SamplePath& path) {
  Vec d(path.counts.begin(), path.counts.end());
  return solve_fluid(instance, instance.initial_inventory(), d).objective;
}

std::string PolicySpec::label() const {
  std::string out(policy_name(kind));
  std::vector<std::string> params;
  const ScheduleKind sk = schedule.value_or(
      kind == PolicyKind::AirKp ? ScheduleKind::KnownProb : ScheduleKind::LearningApprox);
  if (policy_uses_schedule(kind)) {
    switch (sk) {
      case ScheduleKind::LearningApprox:
        params.push_back("alpha=" + format_param(alpha));
        params.push_back("beta=" + format_param(beta));
        break;
      case ScheduleKind::FiniteM:
        params.push_back("schedule=finite");
        params.push_back("M=" + std::to_string(M));
        params.push_back("beta=" + format_param(beta));
        params.push_back("epsilon=" + format_param(epsilon));
        break;
      case ScheduleKind::KnownProb:
        params.push_back("schedule=kp");
        params.push_back("beta=" + format_param(beta));
        break;
      case ScheduleKind::KnownProbFiniteM:
        params.push_back("schedule=kp_finite");
        params.push_back("M=" + std::to_string(M));
        params.push_back("beta=" + format_param(beta));
        break;
      case ScheduleKind::Periodic:
        params.push_back("schedule=periodic");
        params.push_back("omega=" + std::to_string(omega));
        break;
      case ScheduleKind::MidpointKp:
        params.push_back("schedule=midpoint_kp");
        break;
      case ScheduleKind::MidpointFull:
        params.push_back("schedule=midpoint_full");
        break;
      case ScheduleKind::Custom:
        params.push_back("schedule=custom");
        break;
    }
  }
  if (literal_dual_accept && (kind == PolicyKind::Sfa || kind == PolicyKind::Dld))
    params.push_back("literal_accept=1");
  if (!params.empty()) {
    out += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += params[i];
    }
    out += ')';
  }
  return out;
}

std::optional<Schedule> make_schedule(const PolicySpec& spec, long long T) {
  if (!policy_uses_schedule(spec.kind)) return std::nullopt;
  const ScheduleKind sk = spec.schedule.value_or(
      spec.kind == PolicyKind::AirKp ? ScheduleKind::KnownProb : ScheduleKind::LearningApprox);
  switch (sk) {
    case ScheduleKind::LearningApprox: return learning_approx_schedule(T, spec.alpha, spec.beta);
    case ScheduleKind::FiniteM: return finite_schedule(T, spec.M, spec.beta, spec.epsilon);
    case ScheduleKind::KnownProb: return known_prob_schedule(T, spec.beta);
    case ScheduleKind::KnownProbFiniteM: return known_prob_finite_schedule(T, spec.M, spec.beta);
    case ScheduleKind::Periodic: return periodic_schedule(T, spec.omega);
    case ScheduleKind::MidpointKp: return midpoint_schedule(T, false);
    case ScheduleKind::MidpointFull: return midpoint_schedule(T, true);
    case ScheduleKind::Custom:
      throw InputError("custom schedules must be passed to run_policy directly");
  }
  return std::nullopt;
}

RunResult run_policy(const PolicySpec& spec, const Instance& instance, const Schedule* schedule,
                     const SamplePath& path, std::uint64_t decision_seed, bool record_trace) {
  instance.validate();
  if (policy_uses_schedule(spec.kind)) {
    if (schedule == nullptr) throw InputError("run_policy: this policy requires a schedule");
    if (!schedule->times.empty() &&
        (schedule->times.front() < 1 || schedule->times.back() > instance.horizon))
      throw InputError("run_policy: schedule periods outside [1, T]");
  }
  if (path.arrivals.size() != static_cast<std::size_t>(instance.horizon))
    throw InputError("run_policy: path length does not match horizon");

  const double t0 = now_seconds();
  PolicyState state = make_policy_state(instance, spec.kind);
  PolicyOptions options{spec.literal_dual_accept};
  SplitMix64 coins(decision_seed);
  const bool randomized = policy_is_randomized(spec.kind);

  RunResult result;
  result.accepted.assign(instance.num_types(), 0);
  if (record_trace) result.decision_trace.reserve(path.arrivals.size());

  for (const std::int32_t arrival : path.arrivals) {
    const std::size_t j = static_cast<std::size_t>(arrival);
    // One coin per period for the randomized policies, drawn unconditionally
    // so decision streams stay aligned across runs.
    const double coin = randomized ? coins.next_double() : 0.0;
    Decision dec;
    switch (spec.kind) {
      case PolicyKind::Air: dec = air_step(instance, *schedule, state, j); break;
      case PolicyKind::AirKp: dec = air_kp_step(instance, *schedule, state, j); break;
      case PolicyKind::Afr: dec = afr_step(instance, state, j); break;
      case PolicyKind::Ada: dec = ada_step(instance, state, j, coin); break;
      case PolicyKind::AdaKp: dec = ada_kp_step(instance, state, j, coin); break;
      case PolicyKind::Sfa: dec = sfa_step(instance, state, j, options); break;
      case PolicyKind::Dld: dec = dld_step(instance, state, j, options); break;
      case PolicyKind::Buf: dec = buf_step(instance, state, j); break;
    }
    if (dec.accept) {
      result.revenue += instance.rewards[j];
      ++result.accepted[j];
    }
    if (record_trace) result.decision_trace.push_back(dec);
  }
  result.final_inventory = std::move(state.b);
  result.lp_solves = state.lp_solves;
  result.wall_time = now_seconds() - t0;
  return result;
}

long long hindsight_violation_count() { return g_hindsight_violations.load(); }

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

RegretEstimate estimate_regret(const PolicySpec& spec, const Instance& instance,
                               long long n_sims, std::uint64_t base_seed,
                               const SimOptions& options) {
  if (n_sims < 1) throw InputError("estimate_regret: n_sims must be >= 1");
  instance.validate();
  const std::optional<Schedule> schedule = make_schedule(spec, instance.horizon);
  const Schedule* sched_ptr = schedule ? &*schedule : nullptr;

  const double t0 = now_seconds();
  std::vector<double> hindsight(n_sims), revenue(n_sims), regret(n_sims), solves(n_sims);

  const auto run_one = [&](long long i) {
    const std::uint64_t path_seed = split_seed(base_seed, static_cast<std::uint64_t>(i));
    const SamplePath path = sample_path(instance, path_seed);
    const RunResult run = run_policy(spec, instance, sched_ptr, path, split_seed(path_seed, 1));
    const double hv = hindsight_value(instance, path);
    if (run.revenue > hv + 1e-9) g_hindsight_violations.fetch_add(1);
    hindsight[i] = hv;
    revenue[i] = run.revenue;
    regret[i] = hv - run.revenue;
    solves[i] = static_cast<double>(run.lp_solves);
  };

  int workers = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > n_sims) workers = static_cast<int>(n_sims);
  if (workers == 1) {
    for (long long i = 0; i < n_sims; ++i) run_one(i);
  } else {
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (long long i = next.fetch_add(1); i < n_sims; i = next.fetch_add(1)) run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  RegretEstimate est;
  est.n_sims = n_sims;
  const double inv_n = 1.0 / static_cast<double>(n_sims);
  est.mean_hindsight = pairwise_sum(hindsight) * inv_n;
  est.mean_revenue = pairwise_sum(revenue) * inv_n;
  est.mean_regret = pairwise_sum(regret) * inv_n;
  est.mean_lp_solves = pairwise_sum(solves) * inv_n;
  if (n_sims > 1) {
    std::vector<double> sq(n_sims);
    for (long long i = 0; i < n_sims; ++i) {
      const double dev = regret[i] - est.mean_regret;
      sq[i] = dev * dev;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(n_sims - 1);
    est.std_error = std::sqrt(var / static_cast<double>(n_sims));
  }
  est.total_wall_time = now_seconds() - t0;
  return est;
}

std::vector<RegretEstimate> compare_policies(std::span<const PolicySpec> specs,
                                             const Instance& instance, long long n_sims,
                                             std::uint64_t base_seed,
                                             const SimOptions& options) {
  if (specs.empty()) throw InputError("compare_policies: need at least one policy");
  std::vector<RegretEstimate> out;
  out.reserve(specs.size());
  // Path seeds depend only on (base_seed, path index), so every policy sees
  // the same arrival sequences: common random numbers by construction.
  for (const PolicySpec& spec : specs)
    out.push_back(estimate_regret(spec, instance, n_sims, base_seed, options));
  return out;
}

}  // namespace olp
