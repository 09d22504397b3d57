#include "olpbench/config.hpp"

#include <json.hpp>

#include "olpbench/presets.hpp"

namespace olp::bench {

using nlohmann::json;

ScheduleKind schedule_kind_from_string(const std::string& kind) {
  if (kind == "learning_approx") return ScheduleKind::LearningApprox;
  if (kind == "finite") return ScheduleKind::FiniteM;
  if (kind == "kp") return ScheduleKind::KnownProb;
  if (kind == "kp_finite") return ScheduleKind::KnownProbFiniteM;
  if (kind == "periodic") return ScheduleKind::Periodic;
  if (kind == "midpoint_kp") return ScheduleKind::MidpointKp;
  if (kind == "midpoint_full") return ScheduleKind::MidpointFull;
  throw ConfigError("unknown schedule kind: " + kind);
}

PolicySpec policy_spec_from_strings(const std::string& name, const std::string& schedule_kind) {
  PolicySpec spec;
  try {
    spec.kind = policy_from_name(name);
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  if (!schedule_kind.empty()) spec.schedule = schedule_kind_from_string(schedule_kind);
  return spec;
}

void ExperimentConfig::validate() const {
  if (policies.empty()) throw ConfigError("config has an empty policy list");
  if (horizons.empty()) throw ConfigError("config has no horizons");
  if (mode == ExperimentMode::Simulate && n_sims < 1)
    throw ConfigError("n_sims must be at least 1");
  if (!inline_instance && !is_instance_preset(instance_name))
    throw ConfigError("unknown instance preset: " + instance_name);
  if (sweep) {
    if (sweep->param != "rho" && sweep->param != "alpha" && sweep->param != "beta")
      throw ConfigError("sweep parameter must be rho, alpha or beta");
    if (sweep->values.empty()) throw ConfigError("sweep has no values");
    if (sweep->param == "rho" && instance_name.rfind("single_resource", 0) != 0)
      throw ConfigError("rho sweeps need the single_resource instance");
  }
  for (const PolicySpec& p : policies) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
    if (!(p.beta > 0.5 && p.beta < 1.0)) throw ConfigError("beta must lie in (1/2, 1)");
  }
  if (mode == ExperimentMode::Simulate) {
    for (long long T : horizons) {
      for (const PolicySpec& p : policies) {
        const ScheduleKind sk = p.schedule.value_or(
            p.kind == PolicyKind::AirKp ? ScheduleKind::KnownProb : ScheduleKind::LearningApprox);
        const bool loglog = policy_uses_schedule(p.kind) &&
                            (sk == ScheduleKind::LearningApprox || sk == ScheduleKind::FiniteM ||
                             sk == ScheduleKind::KnownProb || sk == ScheduleKind::KnownProbFiniteM);
        if (loglog && T < 9) throw ConfigError("log-log schedules need horizons >= 9");
      }
      if (T < 1) throw ConfigError("horizons must be positive");
    }
  }
}

namespace {

Instance instance_from_json(const json& j) {
  Instance ins;
  ins.rewards = j.at("rewards").get<Vec>();
  ins.budget_rate = j.at("budget_rate").get<Vec>();
  ins.probabilities = j.at("probabilities").get<Vec>();
  ins.horizon = j.value("horizon", 1LL);
  std::vector<Vec> rows;
  for (const auto& row : j.at("consumption")) rows.push_back(row.get<Vec>());
  ins.consumption = Matrix::from_rows(rows);
  return ins;
}

PolicySpec policy_from_json(const json& j) {
  if (j.is_string()) return policy_spec_from_strings(j.get<std::string>(), "");
  PolicySpec spec = policy_spec_from_strings(j.at("name").get<std::string>(),
                                             j.value("schedule", std::string()));
  spec.alpha = j.value("alpha", spec.alpha);
  spec.beta = j.value("beta", spec.beta);
  spec.epsilon = j.value("epsilon", spec.epsilon);
  spec.M = j.value("M", spec.M);
  spec.omega = j.value("omega", spec.omega);
  spec.literal_dual_accept =
      j.value("literal_accept", false) || j.value("sfa_literal_accept", false);
  return spec;
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("mode")) {
      const std::string mode = j.at("mode").get<std::string>();
      if (mode == "simulate") cfg.mode = ExperimentMode::Simulate;
      else if (mode == "schedule_table") cfg.mode = ExperimentMode::ScheduleTable;
      else throw ConfigError("unknown mode: " + mode);
    }
    if (j.contains("instance")) {
      if (j["instance"].is_string()) cfg.instance_name = j["instance"].get<std::string>();
      else {
        cfg.inline_instance = instance_from_json(j["instance"]);
        cfg.instance_name = "(inline)";
      }
    }
    for (const auto& p : j.value("policies", json::array())) cfg.policies.push_back(policy_from_json(p));
    cfg.horizons = j.value("horizons", cfg.horizons);
    cfg.n_sims = j.value("n_sims", cfg.n_sims);
    cfg.base_seed = j.value("base_seed", cfg.base_seed);
    cfg.output_path = j.value("output_path", cfg.output_path);
    cfg.threads = j.value("threads", cfg.threads);
    if (j.contains("sweep")) {
      SweepSpec sweep;
      sweep.param = j["sweep"].at("param").get<std::string>();
      sweep.values = j["sweep"].at("values").get<std::vector<double>>();
      cfg.sweep = std::move(sweep);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  return cfg;
}

namespace {

std::vector<long long> table_horizons() {
  return {2500, 5000, 7500, 10000, 12500, 15000, 17500, 20000, 100000, 200000, 300000};
}

ExperimentConfig base_config(std::string name) {
  ExperimentConfig cfg;
  cfg.preset_name = std::move(name);
  cfg.output_path = cfg.preset_name + ".csv";
  return cfg;
}

}  // namespace

bool is_experiment_preset(const std::string& name) {
  static const char* names[] = {"table4",     "table3_desk", "table5_alpha",
                                "table5_beta", "fig5_rho_sweep", "fig6_10x50",
                                "fig7_finite", "fig8_kp",     "kp_constancy"};
  for (const char* n : names)
    if (name == n) return true;
  return false;
}

ExperimentConfig experiment_preset(const std::string& name, bool full_scale) {
  if (name == "table4") {
    ExperimentConfig cfg = base_config(name);
    cfg.mode = ExperimentMode::ScheduleTable;
    cfg.horizons = table_horizons();
    cfg.policies = {PolicySpec{.kind = PolicyKind::Air}};
    return cfg;
  }
  if (name == "table3_desk") {
    ExperimentConfig cfg = base_config(name);
    cfg.horizons = full_scale
                       ? std::vector<long long>{2500, 5000, 7500, 10000, 12500, 15000, 17500, 20000}
                       : std::vector<long long>{2500, 5000};
    cfg.n_sims = 200;
    cfg.policies = {{.kind = PolicyKind::Air}, {.kind = PolicyKind::Afr},
                    {.kind = PolicyKind::Ada}, {.kind = PolicyKind::Sfa},
                    {.kind = PolicyKind::Dld}, {.kind = PolicyKind::Buf}};
    return cfg;
  }
  if (name == "table5_alpha" || name == "table5_beta") {
    ExperimentConfig cfg = base_config(name);
    cfg.horizons = {30000};
    cfg.n_sims = 200;
    cfg.policies = {{.kind = PolicyKind::Air}};
    SweepSpec sweep;
    if (name == "table5_alpha") {
      sweep.param = "alpha";
      sweep.values = {0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};
    } else {
      sweep.param = "beta";
      sweep.values = {0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
    }
    cfg.sweep = std::move(sweep);
    return cfg;
  }
  if (name == "fig5_rho_sweep") {
    ExperimentConfig cfg = base_config(name);
    cfg.instance_name = "single_resource";
    cfg.horizons = {full_scale ? 50000LL : 10000LL};
    cfg.n_sims = full_scale ? 2000 : 500;
    cfg.policies = {{.kind = PolicyKind::Air}, {.kind = PolicyKind::Afr},
                    {.kind = PolicyKind::Ada}, {.kind = PolicyKind::Sfa},
                    {.kind = PolicyKind::Dld}, {.kind = PolicyKind::Buf}};
    cfg.sweep = SweepSpec{"rho", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}};
    return cfg;
  }
  if (name == "fig6_10x50") {
    ExperimentConfig cfg = base_config(name);
    cfg.instance_name = "fig6_10x50";
    cfg.horizons = {1000, 5000, 10000, 20000, 30000};
    cfg.n_sims = 200;
    cfg.policies = {{.kind = PolicyKind::Air, .alpha = 0.9, .beta = 0.9},
                    {.kind = PolicyKind::Sfa},
                    {.kind = PolicyKind::Dld},
                    {.kind = PolicyKind::Buf}};
    return cfg;
  }
  if (name == "fig7_finite") {
    ExperimentConfig cfg = base_config(name);
    cfg.horizons = full_scale ? std::vector<long long>{2500, 5000, 10000, 15000, 20000, 25000, 30000}
                              : std::vector<long long>{2500, 10000, 20000};
    cfg.n_sims = full_scale ? 2000 : 500;
    cfg.policies = {{.kind = PolicyKind::Air, .schedule = ScheduleKind::FiniteM,
                     .beta = 0.7, .epsilon = 0.01, .M = 3},
                    {.kind = PolicyKind::Sfa},
                    {.kind = PolicyKind::Dld},
                    {.kind = PolicyKind::Buf}};
    return cfg;
  }
  if (name == "fig8_kp") {
    ExperimentConfig cfg = base_config(name);
    cfg.instance_name = "single_resource";
    cfg.horizons = {full_scale ? 50000LL : 10000LL};
    cfg.n_sims = full_scale ? 2000 : 500;
    cfg.policies = {{.kind = PolicyKind::AirKp, .beta = 5.0 / 6.0},
                    {.kind = PolicyKind::AdaKp}};
    cfg.sweep = SweepSpec{"rho", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}};
    return cfg;
  }
  if (name == "kp_constancy") {
    ExperimentConfig cfg = base_config(name);
    cfg.instance_name = "single_resource(0.5)";
    cfg.horizons = {2500, 5000, 10000, 20000};
    cfg.n_sims = 500;
    cfg.policies = {{.kind = PolicyKind::AirKp, .beta = 5.0 / 6.0}};
    return cfg;
  }
  throw ConfigError("unknown experiment preset: " + name);
}

std::string list_presets_text() {
  return
      "Experiment presets (olp-bench run --preset NAME):\n"
      "  table4          resolving-schedule table at alpha=beta=0.7 for 11 horizons\n"
      "                  (no simulation; schedule column only)\n"
      "  table3_desk     six-policy regret comparison on multi_10x2, T in {2500,5000},\n"
      "                  200 sims; --full extends to T=20000\n"
      "  table5_alpha    air regret vs alpha on multi_10x2 at T=30000 (beta=0.7)\n"
      "  table5_beta     air regret vs beta on multi_10x2 at T=30000 (alpha=0.7)\n"
      "  fig5_rho_sweep  regret vs budget rate rho on the single-resource family,\n"
      "                  T=10000 desk (50000 with --full)\n"
      "  fig6_10x50      qualitative sweep on the seeded random 10x50 instance\n"
      "                  (air at alpha=beta=0.9 vs LP-free baselines)\n"
      "  fig7_finite     air with the 3-resolve schedule vs LP-free baselines on\n"
      "                  multi_10x2 across horizons\n"
      "  fig8_kp         known-probability comparison (air-kp at beta=5/6 vs ada-kp)\n"
      "                  on the single-resource rho sweep\n"
      "  kp_constancy    air-kp regret across horizons on single_resource(0.5)\n"
      "\n"
      "Instance presets (usable as \"instance\" in configs):\n"
      "  multi_10x2            fixed 10-resource / 2-type benchmark instance\n"
      "  single_resource(rho)  two types, rewards 2 and 1, one unit each, p=(.5,.5)\n"
      "  fig6_10x50            seeded random 10x50 generator (reproducible)\n";
}

}  // namespace olp::bench
