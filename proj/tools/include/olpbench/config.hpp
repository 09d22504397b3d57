#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "olp/simulation.hpp"
#include "olp/types.hpp"

namespace olp::bench {

/// Invalid configuration: unknown preset or policy, malformed JSON, bad
/// parameter combinations. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  std::string param;  // "rho", "alpha" or "beta"
  std::vector<double> values;
};

enum class ExperimentMode {
  Simulate,       // Monte-Carlo regret estimation
  ScheduleTable,  // emit resolving schedules only, no simulation
};

/// One experiment: an instance (preset name or inline), a policy list, the
/// horizons to run, and Monte-Carlo controls. CLI flags override fields.
struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::Simulate;
  std::string instance_name = "multi_10x2";
  std::optional<Instance> inline_instance;
  std::vector<PolicySpec> policies;
  std::vector<long long> horizons;
  long long n_sims = 200;
  std::uint64_t base_seed = 271828;
  std::optional<SweepSpec> sweep;
  std::string output_path = "olp-bench.csv";
  int threads = 0;  // 0 = one worker per hardware thread
  std::string preset_name;  // informational, recorded in the output

  void validate() const;  // throws ConfigError
};

/// Parse a JSON config document (see README for the schema).
ExperimentConfig parse_config_json(const std::string& text);

/// Canned experiment configurations. full_scale switches the compute-heavy
/// presets from desk-sized horizons/simulation counts to the original scale.
ExperimentConfig experiment_preset(const std::string& name, bool full_scale);

bool is_experiment_preset(const std::string& name);

/// Human-readable catalog of experiment and instance presets.
std::string list_presets_text();

/// Parse policy spec fields shared by JSON configs ("name" plus optional
/// alpha/beta/epsilon/M/omega/schedule/literal_accept).
PolicySpec policy_spec_from_strings(const std::string& name, const std::string& schedule_kind);

ScheduleKind schedule_kind_from_string(const std::string& kind);

}  // namespace olp::bench
