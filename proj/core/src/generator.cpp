#include "crsense/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fmt_compat.hpp"

namespace crsense {

void validate(const GenConfig& c) {
  if (c.m < 1 || c.n < 1) throw std::invalid_argument("GenConfig: m and n must be >= 1");
  if (c.l_max < 1 || c.l_max > c.m)
    throw std::invalid_argument("GenConfig: l_max must lie in [1, m]");
  if (c.area_side <= 0.0) throw std::invalid_argument("GenConfig: area_side must be positive");
  if (c.power_min > c.power_max || c.power_min <= 0.0)
    throw std::invalid_argument("GenConfig: invalid power range");
  if (c.gamma_min > c.gamma_max || c.gamma_min < 0.0)
    throw std::invalid_argument("GenConfig: invalid gamma range");
  if (c.t_c < 0.0 || c.t_c >= 1.0) throw std::invalid_argument("GenConfig: t_c must lie in [0, 1)");
  if (c.sensing_range <= 0.0 || c.kappa <= 0.0)
    throw std::invalid_argument("GenConfig: sensing_range and kappa must be positive");
}

Scenario generate(const GenConfig& c) { return generate(c, {}, {}); }

// Draw order (fixed for reproducibility): PU positions, PU powers, pi0,
// gamma, SU positions, budgets, then per (SU, channel) the in-range P_f
// draws. gamma/budget draws are skipped when overrides are supplied.
//
// Sensing model for an in-range pair (d_ik <= sensing_range), with p_k the
// PU power: q = min(1, d_ik^2 / (kappa * p_k)), P_m = 0.05 + 0.45 q,
// P_f ~ U[0.05, 0.15]. Out-of-range pairs report coin flips (0.5 / 0.5).
Scenario generate(const GenConfig& c, const std::vector<double>& fixed_gamma,
                  const std::vector<int>& fixed_budgets) {
  validate(c);
  if (!fixed_gamma.empty() && fixed_gamma.size() != static_cast<size_t>(c.m))
    throw std::invalid_argument("generate: fixed_gamma length != m");
  if (!fixed_budgets.empty() && fixed_budgets.size() != static_cast<size_t>(c.n))
    throw std::invalid_argument("generate: fixed_budgets length != n");

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> coord(0.0, c.area_side);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  struct Point { double x, y; };
  std::vector<Point> pu(c.m), su(c.n);
  std::vector<double> power(c.m), pi0(c.m), gamma(c.m);
  for (auto& p : pu) { p.x = coord(rng); p.y = coord(rng); }
  {
    std::uniform_real_distribution<double> pw(c.power_min, c.power_max);
    for (double& p : power) p = pw(rng);
  }
  for (double& p : pi0) p = unit(rng);
  if (fixed_gamma.empty()) {
    std::uniform_real_distribution<double> g(c.gamma_min, c.gamma_max);
    for (double& v : gamma) v = g(rng);
  } else {
    gamma = fixed_gamma;
  }
  for (auto& p : su) { p.x = coord(rng); p.y = coord(rng); }

  std::vector<int> budget(c.n);
  if (fixed_budgets.empty()) {
    std::uniform_int_distribution<int> b(1, c.l_max);
    for (int& l : budget) l = b(rng);
  } else {
    budget = fixed_budgets;
    for (int l : budget)
      if (l < 0 || l > c.m)
        throw std::invalid_argument("generate: fixed budget outside [0, m]");
  }

  std::uniform_real_distribution<double> pf_draw(0.05, 0.15);
  std::vector<SuProfile> sus(c.n);
  for (int i = 0; i < c.n; ++i) {
    sus[i].index = i;
    sus[i].budget = budget[i];
    sus[i].pf.resize(c.m);
    sus[i].pm.resize(c.m);
    for (int k = 0; k < c.m; ++k) {
      const double dx = su[i].x - pu[k].x;
      const double dy = su[i].y - pu[k].y;
      const double d2 = dx * dx + dy * dy;
      if (d2 <= c.sensing_range * c.sensing_range) {
        const double q = std::min(1.0, d2 / (c.kappa * power[k]));
        sus[i].pm[k] = 0.05 + 0.45 * q;
        sus[i].pf[k] = pf_draw(rng);
      } else {
        sus[i].pf[k] = 0.5;
        sus[i].pm[k] = 0.5;
      }
    }
  }
  return make_scenario(c.t_c, pi0, gamma, std::move(sus));
}

ReductionInstance reduction_instance(const std::vector<std::uint64_t>& a,
                                     double theta, double t_c) {
  if (a.empty()) throw std::invalid_argument("reduction_instance: empty input");
  for (auto v : a)
    if (v < 1) throw std::invalid_argument("reduction_instance: all a_i must be >= 1");
  if (!(theta > 0.0) || !(theta < 1.0 - t_c))
    throw std::invalid_argument("reduction_instance: theta must lie in (0, 1 - t_c)");

  ReductionInstance inst;
  inst.a = a;
  std::uint64_t max_a = *std::max_element(a.begin(), a.end());
  std::uint64_t scale = 1;
  inst.r = 0;
  while (scale < max_a) {
    scale *= 10;
    ++inst.r;
  }

  // theta1 = theta2 = theta on both channels: pi0 = theta / (1 - t_c),
  // gamma = theta / (1 - pi0).
  const double pi0 = theta / (1.0 - t_c);
  const double gamma = theta / (1.0 - pi0);

  std::vector<SuProfile> sus(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    sus[i].index = static_cast<int>(i);
    sus[i].budget = 1;
    sus[i].pf = {0.0, 0.0};
    sus[i].pm.assign(2, static_cast<double>(a[i]) / static_cast<double>(scale));
  }
  inst.scenario = make_scenario(t_c, {pi0, pi0}, {gamma, gamma}, std::move(sus));
  return inst;
}

}  // namespace crsense
