#include "olp/schedules.hpp"

#include <algorithm>
#include <cmath>

namespace olp {

bool Schedule::contains(long long t) const {
  return std::binary_search(times.begin(), times.end(), t);
}

std::string Schedule::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(times[i]);
  }
  return out;
}

long long guarded_ceil(double x) {
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) <= 1e-9) return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(x));
}

long long guarded_floor(double x) {
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) <= 1e-9) return static_cast<long long>(nearest);
  return static_cast<long long>(std::floor(x));
}

int loglog_count(long long T, double x) {
  const double inner = std::log(static_cast<double>(T)) / std::log(3.0);
  const double k = std::log(inner) / std::log(1.0 / x);
  return static_cast<int>(guarded_ceil(k));
}

namespace {

Schedule finish(std::vector<long long> times, long long T, ScheduleKind kind) {
  for (long long t : times)
    if (t < 1 || t > T) throw InputError("schedule period outside [1, T]");
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return Schedule{std::move(times), kind};
}

void require_beta(double beta) {
  if (!(beta > 0.5 && beta < 1.0)) throw InputError("beta must lie in (1/2, 1)");
}

void require_loglog_horizon(long long T) {
  if (T < 9) throw InputError("log-log schedules need T >= 9");
}

double Td(long long T) { return static_cast<double>(T); }

}  // namespace

Schedule learning_approx_schedule(long long T, double alpha, double beta) {
  require_loglog_horizon(T);
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  require_beta(beta);
  const int KL = loglog_count(T, alpha);
  const int KA = loglog_count(T, beta);
  std::vector<long long> times;
  times.reserve(static_cast<std::size_t>(KL + KA) + 1);
  for (int k = 1; k <= KL; ++k) times.push_back(guarded_ceil(std::pow(Td(T), std::pow(alpha, k))));
  times.push_back(guarded_ceil(Td(T) / 2.0));
  for (int k = 1; k <= KA; ++k)
    times.push_back(guarded_ceil(Td(T) - std::pow(Td(T), std::pow(beta, k))));
  return finish(std::move(times), T, ScheduleKind::LearningApprox);
}

Schedule finite_schedule(long long T, int M, double beta, double epsilon) {
  require_loglog_horizon(T);
  if (M < 2) throw InputError("finite_schedule needs M >= 2");
  require_beta(beta);
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  std::vector<long long> times;
  times.push_back(guarded_ceil(std::pow(Td(T), (0.5 + epsilon) * std::pow(beta, M - 2))));
  times.push_back(guarded_ceil(Td(T) / 2.0));
  for (int k = 1; k <= M - 2; ++k)
    times.push_back(guarded_ceil(Td(T) - std::pow(Td(T), std::pow(beta, k))));
  return finish(std::move(times), T, ScheduleKind::FiniteM);
}

Schedule known_prob_schedule(long long T, double beta) {
  require_loglog_horizon(T);
  require_beta(beta);
  const int KA = loglog_count(T, beta);
  std::vector<long long> times{1};
  for (int k = 1; k <= KA; ++k)
    times.push_back(guarded_ceil(Td(T) - std::pow(Td(T), std::pow(beta, k))));
  return finish(std::move(times), T, ScheduleKind::KnownProb);
}

Schedule known_prob_finite_schedule(long long T, int M, double beta) {
  require_loglog_horizon(T);
  if (M < 1) throw InputError("known_prob_finite_schedule needs M >= 1");
  require_beta(beta);
  std::vector<long long> times{1};
  for (int k = 1; k <= M - 1; ++k)
    times.push_back(guarded_ceil(Td(T) - std::pow(Td(T), std::pow(beta, k))));
  return finish(std::move(times), T, ScheduleKind::KnownProbFiniteM);
}

Schedule periodic_schedule(long long T, long long omega) {
  if (T < 1) throw InputError("periodic_schedule needs T >= 1");
  if (omega < 1) throw InputError("periodic_schedule needs omega >= 1");
  const long long KP = (T - 1) / omega;
  std::vector<long long> times;
  times.reserve(static_cast<std::size_t>(KP) + 1);
  for (long long k = 0; k <= KP; ++k) times.push_back(1 + k * omega);
  return finish(std::move(times), T, ScheduleKind::Periodic);
}

Schedule midpoint_schedule(long long T, bool with_learning) {
  if (T < 4) throw InputError("midpoint_schedule needs T >= 4");
  const int KM = static_cast<int>(guarded_ceil(std::log2(Td(T))));
  std::vector<long long> times{1};
  for (int k = 1; k <= KM; ++k)
    times.push_back(guarded_ceil(Td(T) - Td(T) / std::pow(2.0, k)));
  if (with_learning)
    for (int k = 2; k <= KM; ++k) times.push_back(guarded_ceil(Td(T) / std::pow(2.0, k)));
  return finish(std::move(times), T,
                with_learning ? ScheduleKind::MidpointFull : ScheduleKind::MidpointKp);
}

Schedule custom_schedule(std::vector<long long> times, long long T) {
  return finish(std::move(times), T, ScheduleKind::Custom);
}

}  // namespace olp
