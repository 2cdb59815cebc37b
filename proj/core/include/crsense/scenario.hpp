#pragma once

#include <string>
#include <vector>

namespace crsense {

// One licensed channel (equivalently, one PU). theta1/theta2 are derived
// from (pi0, gamma, T_c) at construction and never stored stale.
struct Channel {
  int index = 0;
  double pi0 = 0.0;     // probability the channel is idle
  double gamma = 0.0;   // normalized PU capacity
  double theta1 = 0.0;  // (1 - T_c) * pi0
  double theta2 = 0.0;  // gamma * (1 - pi0)
};

Channel make_channel(int index, double pi0, double gamma, double t_c);

// One SU: its sensing budget and per-channel error probabilities.
// Out-of-range (SU, channel) pairs carry pf = pm = 0.5 (random reports).
struct SuProfile {
  int index = 0;
  int budget = 0;          // l_i: max channels sensed per slot
  std::vector<double> pf;  // false-alarm probability, one entry per channel
  std::vector<double> pm;  // misdetection probability, one entry per channel
};

struct Scenario {
  std::vector<Channel> channels;
  std::vector<SuProfile> sus;
  double t_c = 0.0;  // control-slot fraction, in [0, 1)

  int num_channels() const { return static_cast<int>(channels.size()); }
  int num_sus() const { return static_cast<int>(sus.size()); }
  int max_budget() const;
};

// Convenience constructor that derives theta1/theta2 for every channel.
Scenario make_scenario(double t_c, const std::vector<double>& pi0,
                       const std::vector<double>& gamma,
                       std::vector<SuProfile> sus);

// Throws std::invalid_argument with a field path (e.g. "su[2].pf[0]") on the
// first violated invariant.
void validate(const Scenario& scenario);

// The sensing sets S_1..S_M; sets[k] lists the SU indices sensing channel k.
struct Assignment {
  std::vector<std::vector<int>> sets;

  // Number of sets containing SU i.
  int usage(int su) const;
};

// Feasibility per the budget constraint: SU i appears in at most l_i sets,
// and at most once per set. Throws naming the violating SU.
void check_feasible(const Assignment& assignment, const Scenario& scenario);
bool is_feasible(const Assignment& assignment, const Scenario& scenario);

}  // namespace crsense
