#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crsense/generator.hpp"

namespace crsense {

enum class SweepKind { vary_n, vary_lmax, vary_gamma };

SweepKind parse_sweep_kind(const std::string& name);
std::string to_string(SweepKind kind);

// One experiment sweep: a grid of swept values, `runs` scenarios per grid
// point. gamma(k) and l_i are drawn once per grid point and held fixed over
// all runs; everything else is redrawn per run.
struct SweepSpec {
  SweepKind kind = SweepKind::vary_n;
  GenConfig base;               // m/n/l_max/gamma_* give the fixed parameters
  std::vector<double> grid;     // empty -> default grid for the kind
  int runs = 100;
  std::uint64_t base_seed = 0;
};

std::vector<double> default_grid(SweepKind kind);

struct SweepRow {
  double swept_value = 0.0;
  double mwm_mean = 0.0, mwm_std = 0.0;
  double greedy_mean = 0.0, greedy_std = 0.0;
  double random_mean = 0.0, random_std = 0.0;
  double upper_bound = 0.0;  // mean of sum_k (theta1 + theta2)
  double mu_mean = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// CSV (deterministic bytes) and a static SVG line chart with the three
// algorithm series plus the upper bound.
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::string csv_string(const std::vector<SweepRow>& rows);
void write_svg(const std::vector<SweepRow>& rows, SweepKind kind,
               const std::string& path);

// Writes <kind>.csv and <kind>.svg into out_dir.
void emit(const std::vector<SweepRow>& rows, SweepKind kind,
          const std::string& out_dir);

}  // namespace crsense
