#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "olp/types.hpp"

namespace olp::bench {

/// Fixed 10-resource / 2-type benchmark instance with a near-degenerate
/// no-learning fluid optimum; the default horizon is overridden per run.
Instance multi_10x2(long long T = 2500);

/// Single-resource family: two types, rewards 2 and 1, each consuming one
/// unit, uniform arrivals. Degenerate at rho = 0.5.
Instance single_resource(double rho, long long T = 10000);

inline constexpr std::uint64_t kFig6GeneratorSeed = 96061905;

/// Seeded random 10x50 instance: A and r uniform on [0,1], p a normalized
/// uniform draw, and rho = xi * (A p) for a uniform xi so the fluid optimum
/// sits near degeneracy. Same generator seed, same instance.
Instance fig6_10x50(long long T = 10000, std::uint64_t generator_seed = kFig6GeneratorSeed);

/// Resolve an instance preset name such as "multi_10x2", "fig6_10x50" or
/// "single_resource(0.45)". Throws InputError on unknown names.
Instance instance_by_name(const std::string& name, long long T);

bool is_instance_preset(const std::string& name);

}  // namespace olp::bench
