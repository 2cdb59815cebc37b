#pragma once

#include <cstdint>
#include <vector>

#include "crsense/scenario.hpp"

namespace crsense {

// Hard cap on exhaustive outcome enumeration: a sensing set larger than this
// is an error, never a silent approximation.
inline constexpr int kEnumerationGuard = 20;

// One realization of the observation vector over a sensing set.
// Bit j of `reports` is the binary report of the j-th SU in the set's
// iteration order (1 = "occupied").
struct ObservationOutcome {
  std::uint32_t reports = 0;
  double likelihood_idle = 0.0;  // P(y | channel idle)
  double likelihood_busy = 0.0;  // P(y | channel occupied)
};

// All 2^|su_set| outcomes with their conditional likelihoods
//   P(y | idle) = prod_{y_i=1} pf_i * prod_{y_j=0} (1 - pf_j)
//   P(y | busy) = prod_{y_i=1} (1 - pm_i) * prod_{y_j=0} pm_j
// su_set must be nonempty and within the enumeration guard.
std::vector<ObservationOutcome> likelihoods(const std::vector<int>& su_set,
                                            int channel,
                                            const Scenario& scenario,
                                            int guard = kEnumerationGuard);

// Expected channel throughput under the optimal Bayesian fusion rule:
//   sum_y max(theta1 * P(y | idle), theta2 * P(y | busy)).
// The empty set yields theta2 (no sensing, channel never accessed by SUs).
// Ties in the per-outcome comparison go to "occupied"; the value is
// tie-invariant.
double channel_throughput(const std::vector<int>& su_set, int channel,
                          const Scenario& scenario,
                          int guard = kEnumerationGuard);

// Closed form for a singleton sensing set:
//   max(theta1 (1-pf), theta2 pm) + max(theta1 pf, theta2 (1-pm)).
// Equals channel_throughput({su}, channel) exactly.
double single_su_throughput(int su, int channel, const Scenario& scenario);

// Sum of channel_throughput over all channels. Checks feasibility first.
double system_throughput(const Assignment& assignment,
                         const Scenario& scenario,
                         int guard = kEnumerationGuard);

}  // namespace crsense
