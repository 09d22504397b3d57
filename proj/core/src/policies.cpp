#include "olp/policies.hpp"

#include <algorithm>
#include <cmath>

#include "olp/lp.hpp"

namespace olp {

namespace {

constexpr double kFeasSlack = 1e-9;

bool fits_inventory(const Instance& inst, const Vec& b, std::size_t j) {
  for (std::size_t i = 0; i < inst.num_resources(); ++i)
    if (inst.consumption(i, j) > b[i] + kFeasSlack) return false;
  return true;
}

void consume(const Instance& inst, Vec& b, std::size_t j) {
  for (std::size_t i = 0; i < inst.num_resources(); ++i) b[i] -= inst.consumption(i, j);
}

double priced_consumption(const Instance& inst, const Vec& q, std::size_t j) {
  double v = 0.0;
  for (std::size_t i = 0; i < inst.num_resources(); ++i) v += inst.consumption(i, j) * q[i];
  return v;
}

Vec empirical_estimate(const PolicyState& s) {
  Vec p(s.N.size(), 0.0);
  if (s.t > 1) {
    const double denom = static_cast<double>(s.t - 1);
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = static_cast<double>(s.N[j]) / denom;
  }
  return p;
}

// Shared body of AIR and AIR-KP; they differ only in which probability
// vector feeds the resolve.
Decision argmax_infreq_step(const Instance& inst, const Schedule& schedule, PolicyState& s,
                            std::size_t j, bool known_prob) {
  Decision dec;
  if (schedule.contains(s.t)) {
    const Vec p = known_prob ? inst.probabilities : empirical_estimate(s);
    const double remaining = static_cast<double>(inst.horizon - s.t + 1);
    Vec d(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) d[k] = remaining * p[k];
    LpSolution sol = solve_fluid(inst, s.b, d);
    s.u = std::move(sol.primal);
    s.d = std::move(d);
    ++s.lp_solves;
    dec.resolved_this_period = true;
  }
  ++s.N[j];
  const bool accept =
      fits_inventory(inst, s.b, j) && s.u[j] > 1.0 && s.u[j] >= s.d[j] - s.u[j];
  if (accept) {
    consume(inst, s.b, j);
    s.u[j] -= 1.0;
  }
  s.d[j] -= 1.0;
  ++s.t;
  dec.accept = accept;
  dec.acceptance_probability = accept ? 1.0 : 0.0;
  return dec;
}

// Shared body of ADA and ADA-KP.
Decision prob_alloc_step(const Instance& inst, PolicyState& s, std::size_t j, double coin,
                         bool known_prob) {
  const Vec p = known_prob ? inst.probabilities : empirical_estimate(s);
  const double remaining = static_cast<double>(inst.horizon - s.t + 1);
  Vec d(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) d[k] = remaining * p[k];
  LpSolution sol = solve_fluid(inst, s.b, d);
  ++s.lp_solves;
  ++s.N[j];

  Decision dec;
  dec.resolved_this_period = true;
  if (fits_inventory(inst, s.b, j)) {
    double prob = 0.0;
    if (d[j] > 0.0) prob = std::clamp(sol.primal[j] / d[j], 0.0, 1.0);
    dec.acceptance_probability = prob;
    if (coin < prob) {
      dec.accept = true;
      consume(inst, s.b, j);
    }
  }
  ++s.t;
  return dec;
}

}  // namespace

PolicyKind policy_from_name(std::string_view name) {
  if (name == "air") return PolicyKind::Air;
  if (name == "air-kp") return PolicyKind::AirKp;
  if (name == "afr") return PolicyKind::Afr;
  if (name == "ada") return PolicyKind::Ada;
  if (name == "ada-kp") return PolicyKind::AdaKp;
  if (name == "sfa") return PolicyKind::Sfa;
  if (name == "dld") return PolicyKind::Dld;
  if (name == "buf") return PolicyKind::Buf;
  throw InputError("unknown policy name: " + std::string(name));
}

std::string_view policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Air: return "air";
    case PolicyKind::AirKp: return "air-kp";
    case PolicyKind::Afr: return "afr";
    case PolicyKind::Ada: return "ada";
    case PolicyKind::AdaKp: return "ada-kp";
    case PolicyKind::Sfa: return "sfa";
    case PolicyKind::Dld: return "dld";
    case PolicyKind::Buf: return "buf";
  }
  return "?";
}

bool policy_uses_schedule(PolicyKind kind) {
  return kind == PolicyKind::Air || kind == PolicyKind::AirKp;
}

bool policy_is_randomized(PolicyKind kind) {
  return kind == PolicyKind::Ada || kind == PolicyKind::AdaKp;
}

std::vector<long long> buf_budget_update_times(long long T) {
  std::vector<long long> out;
  const int K = static_cast<int>(std::ceil(std::log2(static_cast<double>(T))));
  for (int k = 1; k <= K; ++k) {
    const double chunk = static_cast<double>(T) / std::pow(2.0, k);
    out.push_back(T - guarded_ceil(chunk));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PolicyState make_policy_state(const Instance& inst, PolicyKind kind) {
  inst.validate();
  PolicyState s;
  s.b = inst.initial_inventory();
  s.u.assign(inst.num_types(), 0.0);
  s.d.assign(inst.num_types(), 0.0);
  s.N.assign(inst.num_types(), 0);
  s.q.assign(inst.num_resources(), 0.0);
  s.q_learn.assign(inst.num_resources(), 0.0);
  if (kind == PolicyKind::Buf) {
    s.d_rate = inst.budget_rate;
    s.budget_times = buf_budget_update_times(inst.horizon);
  }
  if (kind == PolicyKind::Dld) {
    const double T = static_cast<double>(inst.horizon);
    s.dld_exploration_end = guarded_floor(std::pow(T, 2.0 / 3.0));
    s.dld_step_explore = std::pow(T, -1.0 / 3.0);
    s.dld_step_exploit = std::pow(T, -2.0 / 3.0);
  }
  return s;
}

Decision air_step(const Instance& inst, const Schedule& schedule, PolicyState& s,
                  std::size_t j) {
  return argmax_infreq_step(inst, schedule, s, j, /*known_prob=*/false);
}

Decision air_kp_step(const Instance& inst, const Schedule& schedule, PolicyState& s,
                     std::size_t j) {
  return argmax_infreq_step(inst, schedule, s, j, /*known_prob=*/true);
}

Decision afr_step(const Instance& inst, PolicyState& s, std::size_t j) {
  const Vec p = empirical_estimate(s);
  const double remaining = static_cast<double>(inst.horizon - s.t + 1);
  Vec d(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) d[k] = remaining * p[k];
  LpSolution sol = solve_fluid(inst, s.b, d);
  ++s.lp_solves;
  ++s.N[j];

  Decision dec;
  dec.resolved_this_period = true;
  const bool accept = fits_inventory(inst, s.b, j) && sol.primal[j] >= d[j] - sol.primal[j];
  if (accept) consume(inst, s.b, j);
  ++s.t;
  dec.accept = accept;
  dec.acceptance_probability = accept ? 1.0 : 0.0;
  return dec;
}

Decision ada_step(const Instance& inst, PolicyState& s, std::size_t j, double coin) {
  return prob_alloc_step(inst, s, j, coin, /*known_prob=*/false);
}

Decision ada_kp_step(const Instance& inst, PolicyState& s, std::size_t j, double coin) {
  return prob_alloc_step(inst, s, j, coin, /*known_prob=*/true);
}

Decision sfa_step(const Instance& inst, PolicyState& s, std::size_t j,
                  const PolicyOptions& options) {
  const bool wants = inst.rewards[j] > priced_consumption(inst, s.q, j);
  const double step = 1.0 / std::sqrt(static_cast<double>(s.t));
  for (std::size_t i = 0; i < inst.num_resources(); ++i) {
    const double use = wants ? inst.consumption(i, j) : 0.0;
    s.q[i] = std::max(s.q[i] + step * (use - inst.budget_rate[i]), 0.0);
  }
  ++s.N[j];

  Decision dec;
  const bool feasible = fits_inventory(inst, s.b, j);
  dec.accept = options.literal_dual_accept ? feasible : (wants && feasible);
  if (dec.accept) consume(inst, s.b, j);
  dec.acceptance_probability = dec.accept ? 1.0 : 0.0;
  ++s.t;
  return dec;
}

Decision dld_step(const Instance& inst, PolicyState& s, std::size_t j,
                  const PolicyOptions& options) {
  const long long Te = s.dld_exploration_end;
  if (s.t == Te + 1) s.q = s.q_learn;  // hand the learned prices to the decision dual

  const bool wants = inst.rewards[j] > priced_consumption(inst, s.q, j);
  const double step = s.t <= Te ? s.dld_step_explore : s.dld_step_exploit;
  for (std::size_t i = 0; i < inst.num_resources(); ++i) {
    const double use = wants ? inst.consumption(i, j) : 0.0;
    s.q[i] = std::max(s.q[i] + step * (use - inst.budget_rate[i]), 0.0);
  }
  if (s.t <= Te) {
    const bool wants_learn = inst.rewards[j] > priced_consumption(inst, s.q_learn, j);
    const double lstep = 1.0 / static_cast<double>(s.t);
    for (std::size_t i = 0; i < inst.num_resources(); ++i) {
      const double use = wants_learn ? inst.consumption(i, j) : 0.0;
      s.q_learn[i] = std::max(s.q_learn[i] + lstep * (use - inst.budget_rate[i]), 0.0);
    }
  }
  ++s.N[j];

  Decision dec;
  const bool feasible = fits_inventory(inst, s.b, j);
  dec.accept = options.literal_dual_accept ? feasible : (wants && feasible);
  if (dec.accept) consume(inst, s.b, j);
  dec.acceptance_probability = dec.accept ? 1.0 : 0.0;
  ++s.t;
  return dec;
}

Decision buf_step(const Instance& inst, PolicyState& s, std::size_t j) {
  const bool wants = inst.rewards[j] > priced_consumption(inst, s.q, j);

  Decision dec;
  dec.accept = wants && fits_inventory(inst, s.b, j);
  if (dec.accept) consume(inst, s.b, j);
  dec.acceptance_probability = dec.accept ? 1.0 : 0.0;

  if (std::binary_search(s.budget_times.begin(), s.budget_times.end(), s.t + 1)) {
    s.last_budget_update = s.t + 1;
    const double periods_left = static_cast<double>(inst.horizon - s.t);
    for (std::size_t i = 0; i < inst.num_resources(); ++i) s.d_rate[i] = s.b[i] / periods_left;
  }
  const double step = 1.0 / static_cast<double>(s.t - s.last_budget_update + 2);
  for (std::size_t i = 0; i < inst.num_resources(); ++i) {
    const double use = wants ? inst.consumption(i, j) : 0.0;
    s.q[i] += step * (use - s.d_rate[i]);  // intentionally unprojected
  }
  ++s.N[j];
  ++s.t;
  return dec;
}

}  // namespace olp
