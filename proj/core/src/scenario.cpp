#include "crsense/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fmt_compat.hpp"

namespace crsense {

Channel make_channel(int index, double pi0, double gamma, double t_c) {
  Channel c;
  c.index = index;
  c.pi0 = pi0;
  c.gamma = gamma;
  c.theta1 = (1.0 - t_c) * pi0;
  c.theta2 = gamma * (1.0 - pi0);
  return c;
}

int Scenario::max_budget() const {
  int m = 0;
  for (const auto& su : sus) m = std::max(m, su.budget);
  return m;
}

Scenario make_scenario(double t_c, const std::vector<double>& pi0,
                       const std::vector<double>& gamma,
                       std::vector<SuProfile> sus) {
  if (pi0.size() != gamma.size())
    throw std::invalid_argument("pi0 and gamma must have the same length");
  Scenario s;
  s.t_c = t_c;
  s.channels.reserve(pi0.size());
  for (size_t k = 0; k < pi0.size(); ++k)
    s.channels.push_back(make_channel(static_cast<int>(k), pi0[k], gamma[k], t_c));
  s.sus = std::move(sus);
  validate(s);
  return s;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool in_unit(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void validate(const Scenario& s) {
  require(!s.channels.empty(), "scenario must have at least one channel");
  require(!s.sus.empty(), "scenario must have at least one SU");
  require(s.t_c >= 0.0 && s.t_c < 1.0, "t_c must lie in [0, 1)");
  const int m = s.num_channels();
  for (int k = 0; k < m; ++k) {
    const Channel& c = s.channels[k];
    const std::string at = strcat_("channel[", k, "]");
    require(c.index == k, at + ".index: out of order");
    require(in_unit(c.pi0), at + ".pi0: outside [0,1]");
    require(c.gamma >= 0.0 && std::isfinite(c.gamma), at + ".gamma: negative or non-finite");
    // theta fields must be the derived values, never stale
    require(c.theta1 == (1.0 - s.t_c) * c.pi0, at + ".theta1: inconsistent with pi0 and t_c");
    require(c.theta2 == c.gamma * (1.0 - c.pi0), at + ".theta2: inconsistent with gamma and pi0");
  }
  for (size_t i = 0; i < s.sus.size(); ++i) {
    const SuProfile& su = s.sus[i];
    const std::string at = strcat_("su[", i, "]");
    require(su.index == static_cast<int>(i), at + ".index: out of order");
    require(su.budget >= 0 && su.budget <= m, at + ".budget: outside [0, M]");
    require(su.pf.size() == static_cast<size_t>(m), at + ".pf: length != M");
    require(su.pm.size() == static_cast<size_t>(m), at + ".pm: length != M");
    for (int k = 0; k < m; ++k) {
      require(in_unit(su.pf[k]), strcat_(at, ".pf[", k, "]: outside [0,1]"));
      require(in_unit(su.pm[k]), strcat_(at, ".pm[", k, "]: outside [0,1]"));
    }
  }
}

int Assignment::usage(int su) const {
  int count = 0;
  for (const auto& set : sets)
    count += static_cast<int>(std::count(set.begin(), set.end(), su));
  return count;
}

void check_feasible(const Assignment& a, const Scenario& s) {
  if (a.sets.size() != static_cast<size_t>(s.num_channels()))
    throw std::invalid_argument("assignment must have one set per channel");
  std::vector<int> usage(s.num_sus(), 0);
  for (size_t k = 0; k < a.sets.size(); ++k) {
    std::vector<char> seen(s.num_sus(), 0);
    for (int su : a.sets[k]) {
      if (su < 0 || su >= s.num_sus())
        throw std::invalid_argument(strcat_("assignment set ", k, ": SU index ", su, " out of range"));
      if (seen[su])
        throw std::invalid_argument(strcat_("assignment set ", k, ": SU ", su, " appears twice"));
      seen[su] = 1;
      ++usage[su];
    }
  }
  for (int i = 0; i < s.num_sus(); ++i) {
    if (usage[i] > s.sus[i].budget)
      throw std::invalid_argument(strcat_("infeasible assignment: SU ", i, " used ",
                                          usage[i], " times, budget ", s.sus[i].budget));
  }
}

bool is_feasible(const Assignment& a, const Scenario& s) {
  try {
    check_feasible(a, s);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace crsense
