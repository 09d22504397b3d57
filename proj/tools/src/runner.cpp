#include "olpbench/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>

#include "olpbench/presets.hpp"

namespace olp::bench {

const char* const kCsvHeader =
    "policy,T,sweep_param,sweep_value,mean_regret,std_error,mean_revenue,mean_hindsight,"
    "mean_lp_solves,n_sims,wall_time_s,schedule";

namespace {

// Plain decimal with at most 10 significant digits; no exponent notation.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  if (std::strpbrk(buf, "eE") == nullptr) return buf;
  const int exp10 = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int decimals = std::clamp(9 - exp10, 0, 40);
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

void write_row(std::ostream& out, const std::string& policy, long long T,
               const std::string& sweep_param, const std::string& sweep_value,
               const RegretEstimate& est, const std::string& schedule) {
  out << policy << ',' << T << ',' << sweep_param << ',' << sweep_value << ','
      << num(est.mean_regret) << ',' << num(est.std_error) << ',' << num(est.mean_revenue) << ','
      << num(est.mean_hindsight) << ',' << num(est.mean_lp_solves) << ',' << est.n_sims << ','
      << num(est.total_wall_time) << ',' << '"' << schedule << '"' << '\n';
}

Instance build_instance(const ExperimentConfig& cfg, long long T, const std::string& sweep_param,
                        double sweep_value) {
  if (cfg.inline_instance) return cfg.inline_instance->with_horizon(T);
  if (sweep_param == "rho") return single_resource(sweep_value, T);
  return instance_by_name(cfg.instance_name, T);
}

PolicySpec apply_sweep(PolicySpec spec, const std::string& sweep_param, double sweep_value) {
  if (sweep_param == "alpha") spec.alpha = sweep_value;
  else if (sweep_param == "beta") spec.beta = sweep_value;
  return spec;
}

}  // namespace

void run_experiment_to(const ExperimentConfig& cfg, std::ostream& out, std::ostream* progress) {
  cfg.validate();

  out << "# olp-bench";
  if (!cfg.preset_name.empty()) out << " preset=" << cfg.preset_name;
  out << " instance=" << cfg.instance_name << " base_seed=" << cfg.base_seed
      << " n_sims=" << cfg.n_sims << " threads=" << cfg.threads << '\n';
  out << kCsvHeader << '\n';

  // A single no-op sweep point keeps the loop uniform.
  const std::string sweep_param = cfg.sweep ? cfg.sweep->param : std::string();
  const std::vector<double> sweep_values = cfg.sweep ? cfg.sweep->values : std::vector<double>{0.0};

  for (const double sweep_value : sweep_values) {
    const std::string sweep_value_text = cfg.sweep ? num(sweep_value) : std::string();
    for (const long long T : cfg.horizons) {
      for (const PolicySpec& base_spec : cfg.policies) {
        const PolicySpec spec = apply_sweep(base_spec, sweep_param, sweep_value);
        const std::optional<Schedule> schedule = make_schedule(spec, T);
        const std::string schedule_text = schedule ? schedule->to_string() : std::string();

        if (cfg.mode == ExperimentMode::ScheduleTable) {
          write_row(out, spec.label(), T, sweep_param, sweep_value_text, RegretEstimate{},
                    schedule_text);
          continue;
        }
        const Instance instance = build_instance(cfg, T, sweep_param, sweep_value);
        const RegretEstimate est =
            estimate_regret(spec, instance, cfg.n_sims, cfg.base_seed, SimOptions{cfg.threads});
        write_row(out, spec.label(), T, sweep_param, sweep_value_text, est, schedule_text);
        if (progress)
          (*progress) << spec.label() << " T=" << T
                      << (cfg.sweep ? " " + sweep_param + "=" + sweep_value_text : "")
                      << ": regret=" << num(est.mean_regret) << " (se " << num(est.std_error)
                      << ") in " << num(est.total_wall_time) << "s\n";
      }
    }
  }
}

void run_experiment(const ExperimentConfig& cfg, std::ostream* progress) {
  cfg.validate();
  std::ofstream out(cfg.output_path, std::ios::binary);  // binary: keep LF endings everywhere
  if (!out) throw IoError("cannot open output file: " + cfg.output_path);
  run_experiment_to(cfg, out, progress);
  out.flush();
  if (!out) throw IoError("failed writing output file: " + cfg.output_path);
}

std::string emit_schedule(const std::string& kind, long long T, double alpha, double beta, int M,
                          long long omega, double epsilon) {
  const ScheduleKind sk = schedule_kind_from_string(kind);
  switch (sk) {
    case ScheduleKind::LearningApprox: return learning_approx_schedule(T, alpha, beta).to_string();
    case ScheduleKind::FiniteM: return finite_schedule(T, M, beta, epsilon).to_string();
    case ScheduleKind::KnownProb: return known_prob_schedule(T, beta).to_string();
    case ScheduleKind::KnownProbFiniteM: return known_prob_finite_schedule(T, M, beta).to_string();
    case ScheduleKind::Periodic: return periodic_schedule(T, omega).to_string();
    case ScheduleKind::MidpointKp: return midpoint_schedule(T, false).to_string();
    case ScheduleKind::MidpointFull: return midpoint_schedule(T, true).to_string();
    case ScheduleKind::Custom: break;
  }
  throw ConfigError("unknown schedule kind: " + kind);
}

}  // namespace olp::bench
