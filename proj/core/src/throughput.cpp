#include "crsense/throughput.hpp"

#include <algorithm>
#include <stdexcept>

#include "fmt_compat.hpp"

namespace crsense {

namespace {

void check_set(const std::vector<int>& su_set, int channel,
               const Scenario& s, int guard) {
  if (channel < 0 || channel >= s.num_channels())
    throw std::invalid_argument(strcat_("channel index ", channel, " out of range"));
  if (static_cast<int>(su_set.size()) > guard)
    throw std::invalid_argument(strcat_(
        "sensing set of size ", su_set.size(),
        " too large for exhaustive evaluation (guard ", guard, ")"));
  for (int i : su_set) {
    if (i < 0 || i >= s.num_sus())
      throw std::invalid_argument(strcat_("SU index ", i, " out of range"));
  }
}

// Depth-first walk over all outcome vectors with running likelihood
// products; visit(mask, idle, busy) is called once per leaf. Bit j of mask is
// the report of su_set[j].
template <typename Visit>
void enumerate_outcomes(const std::vector<int>& su_set, int channel,
                        const Scenario& s, Visit&& visit) {
  const int n = static_cast<int>(su_set.size());
  // iterative DFS would also do; recursion depth is bounded by the guard
  auto walk = [&](auto&& self, int depth, std::uint32_t mask, double idle,
                  double busy) -> void {
    if (depth == n) {
      visit(mask, idle, busy);
      return;
    }
    const SuProfile& su = s.sus[su_set[depth]];
    const double pf = su.pf[channel];
    const double pm = su.pm[channel];
    // report 0 ("idle")
    self(self, depth + 1, mask, idle * (1.0 - pf), busy * pm);
    // report 1 ("occupied")
    self(self, depth + 1, mask | (1u << depth), idle * pf, busy * (1.0 - pm));
  };
  walk(walk, 0, 0u, 1.0, 1.0);
}

}  // namespace

std::vector<ObservationOutcome> likelihoods(const std::vector<int>& su_set,
                                            int channel, const Scenario& s,
                                            int guard) {
  if (su_set.empty())
    throw std::invalid_argument("likelihoods: sensing set must be nonempty");
  check_set(su_set, channel, s, guard);
  std::vector<ObservationOutcome> out;
  out.reserve(1u << su_set.size());
  enumerate_outcomes(su_set, channel, s,
                     [&](std::uint32_t mask, double idle, double busy) {
                       out.push_back({mask, idle, busy});
                     });
  // DFS order: sort by report mask for a stable public ordering
  std::sort(out.begin(), out.end(),
            [](const ObservationOutcome& a, const ObservationOutcome& b) {
              return a.reports < b.reports;
            });
  return out;
}

double channel_throughput(const std::vector<int>& su_set, int channel,
                          const Scenario& s, int guard) {
  check_set(su_set, channel, s, guard);
  const Channel& c = s.channels[channel];
  if (su_set.empty()) return c.theta2;
  double total = 0.0;
  enumerate_outcomes(su_set, channel, s,
                     [&](std::uint32_t, double idle, double busy) {
                       total += std::max(c.theta1 * idle, c.theta2 * busy);
                     });
  return total;
}

double single_su_throughput(int su, int channel, const Scenario& s) {
  if (su < 0 || su >= s.num_sus())
    throw std::invalid_argument(strcat_("SU index ", su, " out of range"));
  if (channel < 0 || channel >= s.num_channels())
    throw std::invalid_argument(strcat_("channel index ", channel, " out of range"));
  const Channel& c = s.channels[channel];
  const double pf = s.sus[su].pf[channel];
  const double pm = s.sus[su].pm[channel];
  return std::max(c.theta1 * (1.0 - pf), c.theta2 * pm) +
         std::max(c.theta1 * pf, c.theta2 * (1.0 - pm));
}

double system_throughput(const Assignment& a, const Scenario& s, int guard) {
  check_feasible(a, s);
  double total = 0.0;
  for (int k = 0; k < s.num_channels(); ++k)
    total += channel_throughput(a.sets[k], k, s, guard);
  return total;
}

}  // namespace crsense
