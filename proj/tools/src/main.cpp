#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "olpbench/config.hpp"
#include "olpbench/presets.hpp"
#include "olpbench/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

int default_threads() {
  if (const char* env = std::getenv("OLP_BENCH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return 0;
}

std::vector<long long> parse_horizons(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw olp::bench::ConfigError("bad --horizons list: " + text);
  return out;
}

int cmd_run(const std::string& config_path, const std::string& preset, const std::string& horizons,
            long long sims, long long seed, const std::string& out_path, int threads, bool full) {
  using namespace olp::bench;
  ExperimentConfig cfg;
  bool have_base = false;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file: " << config_path << "\n";
      return kExitRuntime;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_config_json(buf.str());
    have_base = true;
  }
  if (!preset.empty()) {
    cfg = experiment_preset(preset, full);  // --preset replaces the experiment definition
    have_base = true;
  }
  if (!have_base) throw ConfigError("run needs --config FILE or --preset NAME");
  if (!horizons.empty()) cfg.horizons = parse_horizons(horizons);
  if (sims >= 0) cfg.n_sims = sims;
  if (seed >= 0) cfg.base_seed = static_cast<std::uint64_t>(seed);
  if (!out_path.empty()) cfg.output_path = out_path;
  cfg.threads = threads;

  run_experiment(cfg, &std::cerr);
  std::cout << "wrote " << cfg.output_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"olp-bench: online allocation policy benchmark harness"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run an experiment and write CSV");
  std::string config_path, preset, horizons, out_path;
  long long sims = -1, seed = -1;
  int threads = default_threads();
  bool full = false;
  run->add_option("--config", config_path, "JSON experiment config file");
  run->add_option("--preset", preset, "experiment preset name (see `olp-bench presets`)");
  run->add_option("--horizons", horizons, "comma-separated horizon list, overrides config");
  run->add_option("--sims", sims, "simulation count per point, overrides config");
  run->add_option("--seed", seed, "base seed, overrides config");
  run->add_option("--out", out_path, "output CSV path, overrides config");
  run->add_option("--threads", threads, "worker cap (0 = all cores; env OLP_BENCH_THREADS)");
  run->add_flag("--full", full, "run compute-heavy presets at original scale");

  // schedule
  auto* sched = app.add_subcommand("schedule", "Print one resolving schedule");
  std::string kind;
  long long T = 0, omega = 1;
  double alpha = 0.7, beta = 0.7, epsilon = 0.01;
  int M = 3;
  sched->add_option("--kind", kind,
                    "learning_approx|finite|kp|kp_finite|periodic|midpoint_kp|midpoint_full")
      ->required();
  sched->add_option("--T", T, "horizon")->required();
  sched->add_option("--alpha", alpha, "learning exponent, in (0,1)");
  sched->add_option("--beta", beta, "approximation exponent, in (1/2,1)");
  sched->add_option("--M", M, "resolve budget for finite schedules");
  sched->add_option("--omega", omega, "period for periodic schedules");
  sched->add_option("--epsilon", epsilon, "exponent offset for finite schedules");

  // presets
  auto* presets = app.add_subcommand("presets", "List experiment and instance presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed())
      return cmd_run(config_path, preset, horizons, sims, seed, out_path, threads, full);
    if (sched->parsed()) {
      std::cout << olp::bench::emit_schedule(kind, T, alpha, beta, M, omega, epsilon) << "\n";
      return kExitOk;
    }
    if (presets->parsed()) {
      std::cout << olp::bench::list_presets_text();
      return kExitOk;
    }
  } catch (const olp::bench::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const olp::InputError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const olp::bench::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
