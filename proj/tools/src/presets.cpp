#include "olpbench/presets.hpp"

#include <cmath>

#include "olp/rng.hpp"

namespace olp::bench {

Instance multi_10x2(long long T) {
  Instance ins;
  ins.rewards = {0.689, 0.710};
  ins.consumption = Matrix::from_rows({
      {0.226, 0.146},
      {0.957, 0.916},
      {0.005, 0.876},
      {0.457, 0.790},
      {0.285, 0.960},
      {0.572, 0.736},
      {0.701, 0.206},
      {0.093, 0.642},
      {0.903, 0.923},
      {0.743, 0.789},
  });
  ins.budget_rate = {0.128, 0.805, 0.770, 0.695, 0.844, 0.647, 0.181, 0.564, 0.812, 0.694};
  ins.horizon = T;
  ins.probabilities = {0.121, 0.879};
  ins.validate();
  return ins;
}

Instance single_resource(double rho, long long T) {
  if (!(rho >= 0.0) || !std::isfinite(rho))
    throw InputError("single_resource: rho must be a nonnegative real");
  Instance ins;
  ins.rewards = {2.0, 1.0};
  ins.consumption = Matrix::from_rows({{1.0, 1.0}});
  ins.budget_rate = {rho};
  ins.horizon = T;
  ins.probabilities = {0.5, 0.5};
  ins.validate();
  return ins;
}

Instance fig6_10x50(long long T, std::uint64_t generator_seed) {
  constexpr std::size_t m = 10, n = 50;
  SplitMix64 rng(generator_seed);
  Instance ins;
  ins.consumption = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) ins.consumption(i, j) = rng.next_double();
  ins.rewards.resize(n);
  for (auto& r : ins.rewards) r = rng.next_double();
  ins.probabilities.resize(n);
  double sum = 0.0;
  for (auto& p : ins.probabilities) {
    p = rng.next_double();
    sum += p;
  }
  for (auto& p : ins.probabilities) p /= sum;
  // Fix the tiny normalization residue so the sum is exactly 1.
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) acc += ins.probabilities[j];
  ins.probabilities[n - 1] = 1.0 - acc;
  const double xi = rng.next_double();
  ins.budget_rate.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double ap = 0.0;
    for (std::size_t j = 0; j < n; ++j) ap += ins.consumption(i, j) * ins.probabilities[j];
    ins.budget_rate[i] = xi * ap;
  }
  ins.horizon = T;
  ins.validate();
  return ins;
}

bool is_instance_preset(const std::string& name) {
  if (name == "multi_10x2" || name == "fig6_10x50") return true;
  return name.rfind("single_resource", 0) == 0;
}

Instance instance_by_name(const std::string& name, long long T) {
  if (name == "multi_10x2") return multi_10x2(T);
  if (name == "fig6_10x50") return fig6_10x50(T);
  if (name == "single_resource") return single_resource(0.5, T);
  if (name.rfind("single_resource(", 0) == 0 && name.back() == ')') {
    const std::string arg = name.substr(16, name.size() - 17);
    double rho = 0.0;
    try {
      rho = std::stod(arg);
    } catch (const std::exception&) {
      throw InputError("bad single_resource argument: " + arg);
    }
    return single_resource(rho, T);
  }
  throw InputError("unknown instance preset: " + name);
}

}  // namespace olp::bench
