#pragma once

#include <cstdint>
#include <vector>

#include "crsense/scenario.hpp"

namespace crsense {

// Random-scenario parameters. PU/SU positions live in an area_side^2 square;
// per-pair error probabilities come from a distance/power sensing model (see
// generator.cpp for the exact construction).
struct GenConfig {
  double area_side = 100.0;
  int m = 1;  // channels
  int n = 1;  // SUs
  int l_max = 1;
  double power_min = 1.0;
  double power_max = 10.0;
  double t_c = 0.2;
  double gamma_min = 1.0;
  double gamma_max = 3.0;
  double sensing_range = 50.0;
  double kappa = 250.0;  // distance/power scale of the sensing model
  std::uint64_t seed = 0;
};

void validate(const GenConfig& config);

// Deterministic per seed. Optional overrides pin gamma(k) and l_i (used by
// sweeps that hold them fixed across runs); pass empty vectors to draw them.
Scenario generate(const GenConfig& config);
Scenario generate(const GenConfig& config,
                  const std::vector<double>& fixed_gamma,
                  const std::vector<int>& fixed_budgets);

// Two-channel instance encoding a Product Partition input: pf = 0,
// pm_i = a_i / 10^r with r the smallest integer making every pm_i <= 1,
// l_i = 1, theta1 = theta2 = theta on both channels. Maximizing system
// throughput is equivalent to minimizing
// prod_{S_1} pm + prod_{S \ S_1} pm.
struct ReductionInstance {
  std::vector<std::uint64_t> a;
  int r = 0;
  Scenario scenario;
};

// theta must lie in (0, 1 - t_c) so that pi0 < 1 and gamma is finite.
ReductionInstance reduction_instance(const std::vector<std::uint64_t>& a,
                                     double theta, double t_c = 0.2);

}  // namespace crsense
