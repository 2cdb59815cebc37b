#include <benchmark/benchmark.h>

#include <random>

#include "crsense/algorithms.hpp"
#include "crsense/generator.hpp"
#include "crsense/matching.hpp"
#include "crsense/throughput.hpp"

using namespace crsense;

namespace {

Scenario bench_scenario(int m, int n, int l_max) {
  GenConfig c;
  c.m = m;
  c.n = n;
  c.l_max = l_max;
  c.seed = 1;
  return generate(c);
}

void BM_ChannelThroughput(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Scenario s = bench_scenario(1, n, 1);
  std::vector<int> set(n);
  for (int i = 0; i < n; ++i) set[i] = i;
  for (auto _ : state)
    benchmark::DoNotOptimize(channel_throughput(set, 0, s));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ChannelThroughput)->DenseRange(4, 20, 4)->Complexity();

void BM_MaxWeightMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> w(0.0, 10.0);
  BipartiteGraph g{n, n, {}};
  g.w.resize(static_cast<size_t>(n) * n);
  for (double& x : g.w) x = w(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_weight_matching(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaxWeightMatching)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_MwmAssign(benchmark::State& state) {
  const Scenario s = bench_scenario(20, static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(mwm_assign(s));
}
BENCHMARK(BM_MwmAssign)->Arg(4)->Arg(8)->Arg(12);

void BM_BruteForce(benchmark::State& state) {
  const Scenario s = bench_scenario(4, static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_opt(s));
}
BENCHMARK(BM_BruteForce)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
