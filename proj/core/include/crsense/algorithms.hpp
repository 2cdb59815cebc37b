#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crsense/matching.hpp"
#include "crsense/scenario.hpp"

namespace crsense {

// Bipartite graph over SU copies and channels: SU i contributes l_i left
// vertices, each with weight U_k({s_i}) to channel k. SUs with zero budget
// carry no copies.
struct CopyGraph {
  BipartiteGraph graph;
  std::vector<int> copy_su;    // left vertex -> SU index
  std::vector<int> copy_slot;  // left vertex -> copy number within its SU
};

CopyGraph build_copy_graph(const Scenario& scenario);

// Quality diagnostics for the matching-based guarantee:
//   u0[k]     = min_i U_k({s_i}),  ustar[k] = max_i U_k({s_i})
//   groups[i] = channels whose best single sensor is SU i (lowest index wins)
//   lambda[i] = min(l_i, r_i) / r_i
//   rho[i]    = min over the picked channels of ustar/u0
//   mu        = 1 + min_i lambda_i * (rho_i - 1), over SUs with nonempty groups
struct BoundReport {
  std::vector<double> u0;
  std::vector<double> ustar;
  std::vector<std::vector<int>> groups;
  std::vector<double> lambda;  // 0 for SUs with empty groups
  std::vector<double> rho;     // 1 for SUs with empty groups or empty picks
  double mu = 1.0;
  double guarantee = 0.5;  // mu / 2
};

struct AlgoTrace {
  double matching_weight = 0.0;      // total weight of the matching phase
  double fill_gain = 0.0;            // marginal gain added by greedy fill-in
  double combined_value = 0.0;       // matching + fill-in system throughput
  double single_channel_value = 0.0; // best all-on-one-channel scheme
  std::string winner;                // "matching" or "single-channel"
};

struct AlgoResult {
  Assignment assignment;
  double value = 0.0;
  AlgoTrace trace;
};

// The matching-based assignment algorithm: maximum-weight matching on the
// copy graph, greedy fill-in of unmatched copies by marginal gain, then the
// better of that and the best single-channel scheme.
AlgoResult mwm_assign(const Scenario& scenario);

// The greedily constructed matching used to lower-bound mwm_assign: group
// channels by their best single sensor, give each SU its top-u0 channels,
// then cover leftover channels with leftover copies.
struct MgdyResult {
  AlgoResult result;
  BoundReport bound;
};
MgdyResult mgdy_assign(const Scenario& scenario);

BoundReport compute_mu(const Scenario& scenario);

// Per-PU preference lists sorted by pf + pm; random PU permutation each
// round; stops after the first round that places no copy.
AlgoResult greedy_baseline(const Scenario& scenario, std::mt19937_64& rng);

// Shuffle all SU copies, assign each to a uniformly random channel not
// already containing that SU (discard the copy if none).
AlgoResult random_baseline(const Scenario& scenario, std::mt19937_64& rng);

// Exhaustive search over all feasible assignments. Throws if the search
// space (product over SUs of the number of channel subsets of size <= l_i)
// exceeds `cap`.
inline constexpr std::uint64_t kDefaultBruteForceCap = 4'000'000;
AlgoResult brute_force_opt(const Scenario& scenario,
                           std::uint64_t cap = kDefaultBruteForceCap);

}  // namespace crsense
