// Command-line front end: scenario generation, per-scenario solving and
// diagnostics, brute-force oracle, and the experiment sweeps.

#include <cstdio>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "crsense/algorithms.hpp"
#include "crsense/generator.hpp"
#include "crsense/scenario_io.hpp"
#include "crsense/sweep.hpp"
#include "crsense/throughput.hpp"

namespace {

using namespace crsense;

void print_assignment(const Assignment& a) {
  for (size_t k = 0; k < a.sets.size(); ++k) {
    std::printf("  S_%zu = {", k + 1);
    for (size_t j = 0; j < a.sets[k].size(); ++j)
      std::printf("%ss_%d", j ? ", " : "", a.sets[k][j] + 1);
    std::printf("}\n");
  }
}

void print_result(const char* name, const AlgoResult& r) {
  std::printf("%s: value %.12g\n", name, r.value);
  print_assignment(r.assignment);
}

void add_gen_flags(CLI::App* cmd, GenConfig& cfg) {
  cmd->add_option("--m", cfg.m, "number of channels");
  cmd->add_option("--n", cfg.n, "number of SUs");
  cmd->add_option("--l-max", cfg.l_max, "maximum sensing budget");
  cmd->add_option("--area-side", cfg.area_side, "side length of the square area");
  cmd->add_option("--power-min", cfg.power_min, "minimum PU power");
  cmd->add_option("--power-max", cfg.power_max, "maximum PU power");
  cmd->add_option("--t-c", cfg.t_c, "control-slot fraction");
  cmd->add_option("--gamma-min", cfg.gamma_min, "gamma range lower end");
  cmd->add_option("--gamma-max", cfg.gamma_max, "gamma range upper end");
  cmd->add_option("--sensing-range", cfg.sensing_range, "SU sensing range");
  cmd->add_option("--kappa", cfg.kappa, "distance/power scale of the sensing model");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-channel cooperative-sensing assignment toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a config file");

  // gen: write a random scenario file
  GenConfig gen_cfg;
  gen_cfg.m = 4;
  gen_cfg.n = 4;
  gen_cfg.l_max = 2;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random scenario file");
  add_gen_flags(gen_cmd, gen_cfg);
  gen_cmd->add_option("--seed", gen_cfg.seed, "RNG seed");
  gen_cmd->add_option("--out", gen_out, "output scenario file")->required();

  // solve: run every algorithm on one scenario
  std::string solve_file;
  std::uint64_t solve_seed = 0;
  auto* solve_cmd =
      app.add_subcommand("solve", "run MWM, greedy and random on a scenario");
  solve_cmd->add_option("scenario", solve_file, "scenario file")->required();
  solve_cmd->add_option("--seed", solve_seed, "seed for the randomized baselines");

  // bound: mu diagnostics
  std::string bound_file;
  auto* bound_cmd =
      app.add_subcommand("bound", "report the matching quality bound for a scenario");
  bound_cmd->add_option("scenario", bound_file, "scenario file")->required();

  // oracle: brute force
  std::string oracle_file;
  std::uint64_t oracle_cap = kDefaultBruteForceCap;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive optimum of a small scenario");
  oracle_cmd->add_option("scenario", oracle_file, "scenario file")->required();
  oracle_cmd->add_option("--cap", oracle_cap, "search-space cap");

  // sweep
  SweepSpec spec;
  spec.base.m = 20;
  spec.base.n = 8;
  spec.base.l_max = 3;
  std::string sweep_kind = "vary-n";
  std::string sweep_out = "out";
  auto* sweep_cmd = app.add_subcommand("sweep", "run an experiment sweep");
  sweep_cmd->add_option("--kind", sweep_kind,
                        "vary-n | vary-lmax | vary-gamma-range");
  sweep_cmd->add_option("--seed", spec.base_seed, "base seed");
  sweep_cmd->add_option("--runs", spec.runs, "runs per grid point");
  sweep_cmd->add_option("--out", sweep_out, "output directory");
  sweep_cmd->add_option("--grid", spec.grid, "swept values (default per kind)");
  add_gen_flags(sweep_cmd, spec.base);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      save_scenario(generate(gen_cfg), gen_out);
      std::printf("wrote %s (M=%d, N=%d)\n", gen_out.c_str(), gen_cfg.m, gen_cfg.n);
    } else if (*solve_cmd) {
      const Scenario s = load_scenario(solve_file);
      print_result("mwm", mwm_assign(s));
      std::mt19937_64 grng(solve_seed);
      print_result("greedy", greedy_baseline(s, grng));
      std::mt19937_64 rrng(solve_seed + 1);
      print_result("random", random_baseline(s, rrng));
      double ub = 0.0;
      for (const Channel& c : s.channels) ub += c.theta1 + c.theta2;
      std::printf("upper bound (sum theta1+theta2): %.12g\n", ub);
    } else if (*bound_cmd) {
      const Scenario s = load_scenario(bound_file);
      const BoundReport b = compute_mu(s);
      for (int k = 0; k < s.num_channels(); ++k)
        std::printf("channel %d: U0 %.12g  U* %.12g\n", k + 1, b.u0[k], b.ustar[k]);
      for (int i = 0; i < s.num_sus(); ++i) {
        std::printf("su %d: group {", i + 1);
        for (size_t j = 0; j < b.groups[i].size(); ++j)
          std::printf("%sc_%d", j ? ", " : "", b.groups[i][j] + 1);
        std::printf("}  lambda %.12g  rho %.12g\n", b.lambda[i], b.rho[i]);
      }
      std::printf("mu: %.12g\nguarantee (mu/2): %.12g\n", b.mu, b.guarantee);
    } else if (*oracle_cmd) {
      const Scenario s = load_scenario(oracle_file);
      print_result("optimal", brute_force_opt(s, oracle_cap));
    } else if (*sweep_cmd) {
      spec.kind = parse_sweep_kind(sweep_kind);
      const auto rows = run_sweep(spec);
      emit(rows, spec.kind, sweep_out);
      std::printf("wrote %s/%s.{csv,svg} (%zu rows, %d runs each)\n",
                  sweep_out.c_str(), to_string(spec.kind).c_str(), rows.size(),
                  spec.runs);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
