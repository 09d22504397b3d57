// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.
//
// Everything here is pinned: seeds, simulation counts, tolerances. The run
// is deterministic for a fixed build regardless of worker count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "olp/lp.hpp"
#include "olp/rng.hpp"
#include "olp/simulation.hpp"
#include "olpbench/presets.hpp"
#include "olpbench/runner.hpp"
#include "support/golden_schedules.hpp"
#include "support/lp_oracle.hpp"

using namespace olp;
using olp::bench::multi_10x2;
using olp::bench::single_resource;

namespace {

constexpr std::uint64_t kSeed = 271828;  // fixed acceptance seed
const SimOptions kPar{};                 // all hardware threads

struct Criterion {
  int id;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Criterion> g_results;

template <typename F>
void run_criterion(int id, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c{id, true, "", 0.0};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail += std::string(" exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  g_results.push_back(std::move(c));
}

void expect(Criterion& c, bool ok, const std::string& what) {
  if (!ok) {
    c.pass = false;
    c.detail += " FAILED{" + what + "}";
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// ---- criterion bodies -----------------------------------------------------

void criterion_1_schedule_golden(Criterion& c) {
  for (const auto& row : olp::testing::golden_schedules_07()) {
    const Schedule got = learning_approx_schedule(row.T, 0.7, 0.7);
    expect(c, got.times == row.times, "T=" + std::to_string(row.T) + " -> " + got.to_string());
  }
  c.detail = "11 horizons bit-exact at alpha=beta=0.7" + c.detail;
}

void criterion_2_table3_desk(Criterion& c) {
  const Instance ins = multi_10x2(2500);
  struct Row {
    PolicySpec spec;
    double lo, hi;
    double exact_solves;  // <0: not checked
  };
  const Row rows[] = {
      {{.kind = PolicyKind::Air}, 1.0, 4.5, 13.0},
      {{.kind = PolicyKind::Afr}, 0.5, 3.5, 2500.0},
      {{.kind = PolicyKind::Ada}, 4.0, 13.0, 2500.0},
      {{.kind = PolicyKind::Sfa}, 30.0, 62.0, 0.0},
      {{.kind = PolicyKind::Dld}, 40.0, 85.0, 0.0},
      {{.kind = PolicyKind::Buf}, 32.0, 66.0, 0.0},
  };
  std::string seen;
  for (const Row& row : rows) {
    const RegretEstimate est = estimate_regret(row.spec, ins, 200, kSeed, kPar);
    const std::string name(policy_name(row.spec.kind));
    expect(c, est.mean_regret >= row.lo && est.mean_regret <= row.hi,
           name + " regret " + fmt(est.mean_regret) + " outside [" + fmt(row.lo) + "," +
               fmt(row.hi) + "]");
    expect(c, est.mean_lp_solves == row.exact_solves,
           name + " lp_solves " + fmt(est.mean_lp_solves));
    seen += " " + name + "=" + fmt(est.mean_regret);
  }
  c.detail = "T=2500, 200 sims:" + seen + c.detail;
}

void criterion_3_flat_vs_growing(Criterion& c) {
  const RegretEstimate air_small =
      estimate_regret({.kind = PolicyKind::Air}, multi_10x2(2500), 200, kSeed, kPar);
  const RegretEstimate air_large =
      estimate_regret({.kind = PolicyKind::Air}, multi_10x2(20000), 200, kSeed, kPar);
  const RegretEstimate sfa_small =
      estimate_regret({.kind = PolicyKind::Sfa}, multi_10x2(2500), 200, kSeed, kPar);
  const RegretEstimate sfa_large =
      estimate_regret({.kind = PolicyKind::Sfa}, multi_10x2(20000), 200, kSeed, kPar);
  expect(c, air_large.mean_regret <= 2.0 * air_small.mean_regret,
         "air grew: " + fmt(air_small.mean_regret) + " -> " + fmt(air_large.mean_regret));
  expect(c, sfa_large.mean_regret >= 1.5 * sfa_small.mean_regret,
         "sfa flat: " + fmt(sfa_small.mean_regret) + " -> " + fmt(sfa_large.mean_regret));
  c.detail = "air " + fmt(air_small.mean_regret) + "->" + fmt(air_large.mean_regret) + ", sfa " +
             fmt(sfa_small.mean_regret) + "->" + fmt(sfa_large.mean_regret) + c.detail;
}

void criterion_4_rho_sweep(Criterion& c) {
  double air_at_half = 0.0, sfa_at_half = 0.0, worst_air = 0.0;
  for (const double rho : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}) {
    const Instance ins = single_resource(rho, 10000);
    const RegretEstimate air = estimate_regret({.kind = PolicyKind::Air}, ins, 500, kSeed, kPar);
    worst_air = std::max(worst_air, air.mean_regret);
    expect(c, air.mean_regret <= 10.0, "air regret " + fmt(air.mean_regret) + " at rho=" + fmt(rho));
    if (rho == 0.5) {
      air_at_half = air.mean_regret;
      sfa_at_half =
          estimate_regret({.kind = PolicyKind::Sfa}, ins, 500, kSeed, kPar).mean_regret;
    }
  }
  expect(c, sfa_at_half >= 3.0 * air_at_half,
         "sfa@0.5 " + fmt(sfa_at_half) + " < 3x air@0.5 " + fmt(air_at_half));
  c.detail = "worst air " + fmt(worst_air) + "; at rho=0.5 air " + fmt(air_at_half) + " vs sfa " +
             fmt(sfa_at_half) + c.detail;
}

void criterion_5_three_resolves(Criterion& c) {
  const Instance ins = multi_10x2(10000);
  const PolicySpec air3{
      .kind = PolicyKind::Air, .schedule = ScheduleKind::FiniteM, .beta = 0.7, .epsilon = 0.01,
      .M = 3};
  const RegretEstimate air = estimate_regret(air3, ins, 500, kSeed, kPar);
  const RegretEstimate sfa = estimate_regret({.kind = PolicyKind::Sfa}, ins, 500, kSeed, kPar);
  expect(c, air.mean_regret <= 0.5 * sfa.mean_regret,
         "air-3 " + fmt(air.mean_regret) + " vs sfa " + fmt(sfa.mean_regret));
  c.detail = "air-3 " + fmt(air.mean_regret) + " <= 0.5 * sfa " + fmt(sfa.mean_regret) + c.detail;
}

void criterion_6_lp_oracle(Criterion& c) {
  SplitMix64 rng(606060);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t m = 1 + rng.next_u64() % 3;
    const std::size_t n = 1 + rng.next_u64() % 4;
    Instance ins;
    ins.horizon = 10;
    ins.budget_rate.assign(m, 1.0);
    ins.probabilities.assign(n, 1.0 / static_cast<double>(n));
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) acc += ins.probabilities[j];
    ins.probabilities[n - 1] = 1.0 - acc;
    ins.rewards.resize(n);
    for (auto& r : ins.rewards) r = static_cast<double>(rng.next_u64() % 6);
    ins.consumption = Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ins.consumption(i, j) = static_cast<double>(rng.next_u64() % 6);
    Vec b(m), d(n);
    for (auto& x : b) x = static_cast<double>(rng.next_u64() % 6);
    for (auto& x : d) x = static_cast<double>(rng.next_u64() % 6);
    const double mine = solve_fluid(ins, b, d).objective;
    const double oracle = olp::testing::brute_force_lp_optimum(ins, b, d);
    worst = std::max(worst, std::abs(mine - oracle));
    expect(c, std::abs(mine - oracle) <= 1e-7 * (1.0 + std::abs(oracle)),
           "lp #" + std::to_string(it) + " gap " + fmt(mine - oracle));
  }
  c.detail = "1000 random LPs vs vertex enumeration, worst gap " + fmt(worst) + c.detail;
}

void criterion_7_surrogate(Criterion& c) {
  const Instance ins = single_resource(0.5, 1000);
  const Schedule sched = learning_approx_schedule(1000, 0.7, 0.7);
  int checked = 0;
  double worst = 0.0;
  for (int pidx = 0; pidx < 100; ++pidx) {
    const std::uint64_t path_seed = split_seed(kSeed, static_cast<std::uint64_t>(pidx));
    const SamplePath path = sample_path(ins, path_seed);
    PolicyState s = make_policy_state(ins, PolicyKind::Air);
    double revenue = 0.0;
    bool cond_held = false;
    std::vector<std::array<Vec, 3>> eligible;  // (b, u, d) snapshots
    for (long long t = 1; t <= 1000; ++t) {
      const bool resolved = sched.contains(t);
      const Decision dec = air_step(ins, sched, s, path.arrivals[t - 1]);
      if (dec.accept) revenue += ins.rewards[path.arrivals[t - 1]];
      if (resolved) cond_held = true;
      cond_held = cond_held && std::min(s.d[0], s.d[1]) >= 2.0;
      if (cond_held) eligible.push_back({s.b, s.u, s.d});
    }
    // Per-path hindsight dominance (criterion 8 rides along).
    expect(c, revenue <= hindsight_value(ins, path) + 1e-9, "revenue beat hindsight");
    // 10 evenly spaced eligible snapshots.
    const std::size_t want = std::min<std::size_t>(10, eligible.size());
    for (std::size_t k = 0; k < want; ++k) {
      const auto& snap = eligible[k * eligible.size() / want];
      const double phi = solve_fluid(ins, snap[0], snap[2]).objective;
      const double plan = ins.rewards[0] * snap[1][0] + ins.rewards[1] * snap[1][1];
      worst = std::max(worst, std::abs(plan - phi));
      expect(c, std::abs(plan - phi) <= 1e-6, "plan value off by " + fmt(plan - phi));
      ++checked;
    }
  }
  expect(c, checked >= 900, "too few eligible checkpoints: " + std::to_string(checked));
  c.detail = std::to_string(checked) + " checkpoints, worst |r'u - phi| = " + fmt(worst) +
             c.detail;
}

void criterion_9_known_prob_constancy(Criterion& c) {
  const PolicySpec kp{.kind = PolicyKind::AirKp, .beta = 5.0 / 6.0};
  const RegretEstimate small =
      estimate_regret(kp, single_resource(0.5, 2500), 500, kSeed, kPar);
  const RegretEstimate large =
      estimate_regret(kp, single_resource(0.5, 20000), 500, kSeed, kPar);
  expect(c, large.mean_regret <= 2.0 * small.mean_regret,
         "regret grew: " + fmt(small.mean_regret) + " -> " + fmt(large.mean_regret));
  // Resolve counts equal the schedule sizes exactly.
  expect(c, small.mean_lp_solves ==
                static_cast<double>(known_prob_schedule(2500, 5.0 / 6.0).size()),
         "lp_solves at T=2500: " + fmt(small.mean_lp_solves));
  expect(c, large.mean_lp_solves ==
                static_cast<double>(known_prob_schedule(20000, 5.0 / 6.0).size()),
         "lp_solves at T=20000: " + fmt(large.mean_lp_solves));
  // Schedule size at the reference horizon, via the CLI's emitter.
  const std::string emitted = olp::bench::emit_schedule("kp", 50000, 0.7, 5.0 / 6.0, 3, 1, 0.01);
  const std::size_t count = 1 + std::count(emitted.begin(), emitted.end(), ',');
  expect(c, count == 14, "kp schedule at T=50000 has " + std::to_string(count) + " periods");
  c.detail = "regret " + fmt(small.mean_regret) + " -> " + fmt(large.mean_regret) +
             "; |schedule(50000)| = " + std::to_string(count) + c.detail;
}

void criterion_10_two_resolve_growth(Criterion& c) {
  const PolicySpec kp2{
      .kind = PolicyKind::AirKp, .schedule = ScheduleKind::KnownProbFiniteM, .beta = 0.7, .M = 2};
  double prev = -1.0;
  std::string seen;
  for (const long long T : {2500LL, 10000LL, 40000LL}) {
    const RegretEstimate est = estimate_regret(kp2, single_resource(0.5, T), 500, kSeed, kPar);
    expect(c, est.mean_regret > prev,
           "not increasing at T=" + std::to_string(T) + ": " + fmt(est.mean_regret));
    expect(c, est.mean_lp_solves == 2.0, "lp_solves " + fmt(est.mean_lp_solves));
    prev = est.mean_regret;
    seen += " " + fmt(est.mean_regret);
  }
  c.detail = "regret over T in {2500,10000,40000}:" + seen + c.detail;
}

void criterion_8_dominance(Criterion& c) {
  const long long violations = hindsight_violation_count();
  expect(c, violations == 0, std::to_string(violations) + " violations");
  c.detail = "revenue <= hindsight + 1e-9 on every simulated path (violations: " +
             std::to_string(violations) + ")" + c.detail;
}

}  // namespace

int main() {
  std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(kSeed));

  run_criterion(1, criterion_1_schedule_golden);
  run_criterion(2, criterion_2_table3_desk);
  run_criterion(3, criterion_3_flat_vs_growing);
  run_criterion(4, criterion_4_rho_sweep);
  run_criterion(5, criterion_5_three_resolves);
  run_criterion(6, criterion_6_lp_oracle);
  run_criterion(7, criterion_7_surrogate);
  run_criterion(9, criterion_9_known_prob_constancy);
  run_criterion(10, criterion_10_two_resolve_growth);
  // Evaluated last: it audits every path simulated by the criteria above.
  run_criterion(8, criterion_8_dominance);

  std::sort(g_results.begin(), g_results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  int failures = 0;
  for (const Criterion& c : g_results) {
    if (!c.pass) ++failures;
    std::printf("[%s] criterion %2d (%6.2fs): %s\n", c.pass ? "PASS" : "FAIL", c.id, c.seconds,
                c.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(g_results.size()) - failures,
              g_results.size());
  return failures;
}
