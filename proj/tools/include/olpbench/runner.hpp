#pragma once

#include <iosfwd>
#include <string>

#include "olpbench/config.hpp"

namespace olp::bench {

/// I/O failure while writing results; the CLI maps this to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV column names, in order.
extern const char* const kCsvHeader;

/// Run the configured experiment and write one CSV row per
/// (policy, horizon, sweep point). progress, when non-null, receives one
/// line per finished row.
void run_experiment(const ExperimentConfig& config, std::ostream* progress = nullptr);

/// Same, but writing CSV to an arbitrary stream (used by tests).
void run_experiment_to(const ExperimentConfig& config, std::ostream& out,
                       std::ostream* progress = nullptr);

/// Render one schedule as ascending comma-separated text. kind uses the
/// config vocabulary: learning_approx, finite, kp, kp_finite, periodic,
/// midpoint_kp, midpoint_full.
std::string emit_schedule(const std::string& kind, long long T, double alpha, double beta, int M,
                          long long omega, double epsilon);

}  // namespace olp::bench
