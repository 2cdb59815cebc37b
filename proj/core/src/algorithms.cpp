#include "crsense/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "crsense/throughput.hpp"
#include "fmt_compat.hpp"

namespace crsense {

namespace {

// U_k({s_i}) for every SU/channel pair, via the closed form.
std::vector<std::vector<double>> singleton_table(const Scenario& s) {
  std::vector<std::vector<double>> t(s.num_sus(),
                                     std::vector<double>(s.num_channels()));
  for (int i = 0; i < s.num_sus(); ++i)
    for (int k = 0; k < s.num_channels(); ++k)
      t[i][k] = single_su_throughput(i, k, s);
  return t;
}

Assignment empty_assignment(const Scenario& s) {
  Assignment a;
  a.sets.assign(s.num_channels(), {});
  return a;
}

bool contains(const std::vector<int>& set, int su) {
  return std::find(set.begin(), set.end(), su) != set.end();
}

// The channel grouping behind M_Gdy and mu: channel k belongs to the
// lowest-index SU maximizing U_k({s_i}); each group is sorted by u0
// descending (ties: lowest channel index) and the first min(l_i, r_i)
// channels are the ones SU i actually takes.
struct Grouping {
  std::vector<double> u0, ustar;
  std::vector<std::vector<int>> groups;  // per SU, sorted
  std::vector<int> picks;                // per SU, min(l_i, r_i)
};

Grouping make_grouping(const Scenario& s,
                       const std::vector<std::vector<double>>& single) {
  const int m = s.num_channels();
  const int n = s.num_sus();
  Grouping g;
  g.u0.assign(m, 0.0);
  g.ustar.assign(m, 0.0);
  g.groups.assign(n, {});
  g.picks.assign(n, 0);
  for (int k = 0; k < m; ++k) {
    int owner = 0;
    double lo = single[0][k], hi = single[0][k];
    for (int i = 1; i < n; ++i) {
      lo = std::min(lo, single[i][k]);
      if (single[i][k] > hi) {
        hi = single[i][k];
        owner = i;
      }
    }
    g.u0[k] = lo;
    g.ustar[k] = hi;
    g.groups[owner].push_back(k);
  }
  for (int i = 0; i < n; ++i) {
    auto& group = g.groups[i];
    std::sort(group.begin(), group.end(), [&](int a, int b) {
      if (g.u0[a] != g.u0[b]) return g.u0[a] > g.u0[b];
      return a < b;
    });
    g.picks[i] = std::min<int>(s.sus[i].budget, static_cast<int>(group.size()));
  }
  return g;
}

BoundReport make_bound_report(const Scenario& s, const Grouping& g) {
  const int n = s.num_sus();
  BoundReport r;
  r.u0 = g.u0;
  r.ustar = g.ustar;
  r.groups = g.groups;
  r.lambda.assign(n, 0.0);
  r.rho.assign(n, 1.0);
  double min_term = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const auto& group = g.groups[i];
    if (group.empty()) continue;  // excluded from the min defining mu
    r.lambda[i] = static_cast<double>(g.picks[i]) / group.size();
    double rho = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.picks[i]; ++j) {
      const int k = group[j];
      if (r.u0[k] > 0.0) rho = std::min(rho, r.ustar[k] / r.u0[k]);
    }
    r.rho[i] = std::isfinite(rho) ? rho : 1.0;
    min_term = std::min(min_term, r.lambda[i] * (r.rho[i] - 1.0));
  }
  r.mu = std::isfinite(min_term) ? 1.0 + min_term : 1.0;
  r.guarantee = r.mu / 2.0;
  return r;
}

}  // namespace

CopyGraph build_copy_graph(const Scenario& s) {
  const auto single = singleton_table(s);
  CopyGraph cg;
  for (int i = 0; i < s.num_sus(); ++i)
    for (int j = 0; j < s.sus[i].budget; ++j) {
      cg.copy_su.push_back(i);
      cg.copy_slot.push_back(j);
    }
  cg.graph.n_left = static_cast<int>(cg.copy_su.size());
  cg.graph.n_right = s.num_channels();
  cg.graph.w.resize(static_cast<size_t>(cg.graph.n_left) * cg.graph.n_right);
  for (int c = 0; c < cg.graph.n_left; ++c)
    for (int k = 0; k < cg.graph.n_right; ++k)
      cg.graph.weight(c, k) = single[cg.copy_su[c]][k];
  return cg;
}

AlgoResult mwm_assign(const Scenario& s) {
  validate(s);
  const int m = s.num_channels();
  const CopyGraph cg = build_copy_graph(s);
  const Matching matching = max_weight_matching(cg.graph);

  AlgoResult res;
  res.assignment = empty_assignment(s);
  res.trace.matching_weight = matching.total_weight;
  for (int k = 0; k < m; ++k) {
    const int c = matching.right_to_left[k];
    if (c >= 0) res.assignment.sets[k].push_back(cg.copy_su[c]);
  }

  double value = system_throughput(res.assignment, s);
  const double matching_value = value;

  // Greedy fill-in: unmatched copies in ascending (SU, copy) order go to the
  // channel with the largest marginal gain among channels not already
  // containing that SU. A copy with no eligible channel is discarded.
  for (int c = 0; c < cg.graph.n_left; ++c) {
    if (matching.left_to_right[c] >= 0) continue;
    const int su = cg.copy_su[c];
    int best_k = -1;
    double best_gain = -1.0;
    for (int k = 0; k < m; ++k) {
      auto& set = res.assignment.sets[k];
      if (contains(set, su)) continue;
      const double before = channel_throughput(set, k, s);
      set.push_back(su);
      const double gain = channel_throughput(set, k, s) - before;
      set.pop_back();
      if (gain > best_gain) {
        best_gain = gain;
        best_k = k;
      }
    }
    if (best_k >= 0) {
      res.assignment.sets[best_k].push_back(su);
      value += best_gain;
    }
  }
  value = system_throughput(res.assignment, s);
  res.trace.combined_value = value;
  res.trace.fill_gain = value - matching_value;

  // Single-channel fallback: every SU with a positive budget senses one
  // common channel, all other channels sit unsensed at theta2.
  std::vector<int> all;
  for (int i = 0; i < s.num_sus(); ++i)
    if (s.sus[i].budget >= 1) all.push_back(i);
  double theta2_total = 0.0;
  for (const Channel& c : s.channels) theta2_total += c.theta2;
  int single_k = -1;
  double single_value = -1.0;
  if (!all.empty()) {
    for (int k = 0; k < m; ++k) {
      const double v = theta2_total - s.channels[k].theta2 +
                       channel_throughput(all, k, s);
      if (v > single_value) {
        single_value = v;
        single_k = k;
      }
    }
  }
  res.trace.single_channel_value = single_value;

  if (single_k >= 0 && single_value > value) {
    res.assignment = empty_assignment(s);
    res.assignment.sets[single_k] = all;
    res.value = single_value;
    res.trace.winner = "single-channel";
  } else {
    res.value = value;
    res.trace.winner = "matching";
  }
  return res;
}

BoundReport compute_mu(const Scenario& s) {
  validate(s);
  const auto single = singleton_table(s);
  return make_bound_report(s, make_grouping(s, single));
}

MgdyResult mgdy_assign(const Scenario& s) {
  validate(s);
  const auto single = singleton_table(s);
  const Grouping g = make_grouping(s, single);

  MgdyResult out;
  out.bound = make_bound_report(s, g);
  out.result.assignment = empty_assignment(s);
  std::vector<int> used(s.num_sus(), 0);
  for (int i = 0; i < s.num_sus(); ++i)
    for (int j = 0; j < g.picks[i]; ++j) {
      out.result.assignment.sets[g.groups[i][j]].push_back(i);
      ++used[i];
    }
  // Cover the leftover channels with leftover copies: lowest-index SU with
  // remaining budget. Channels may stay empty once budgets run out.
  for (int k = 0; k < s.num_channels(); ++k) {
    if (!out.result.assignment.sets[k].empty()) continue;
    for (int i = 0; i < s.num_sus(); ++i) {
      if (used[i] < s.sus[i].budget) {
        out.result.assignment.sets[k].push_back(i);
        ++used[i];
        break;
      }
    }
  }
  out.result.value = system_throughput(out.result.assignment, s);
  out.result.trace.combined_value = out.result.value;
  out.result.trace.winner = "mgdy";
  return out;
}

AlgoResult greedy_baseline(const Scenario& s, std::mt19937_64& rng) {
  validate(s);
  const int m = s.num_channels();
  const int n = s.num_sus();

  // Per-PU preference list: ascending pm + pf, ties by SU index.
  std::vector<std::vector<int>> pref(m);
  for (int k = 0; k < m; ++k) {
    pref[k].resize(n);
    std::iota(pref[k].begin(), pref[k].end(), 0);
    std::stable_sort(pref[k].begin(), pref[k].end(), [&](int a, int b) {
      return s.sus[a].pm[k] + s.sus[a].pf[k] < s.sus[b].pm[k] + s.sus[b].pf[k];
    });
  }

  AlgoResult res;
  res.assignment = empty_assignment(s);
  std::vector<int> used(n, 0);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  while (true) {
    std::shuffle(order.begin(), order.end(), rng);
    int placed = 0;
    for (int k : order) {
      for (int i : pref[k]) {
        if (used[i] >= s.sus[i].budget) continue;
        if (contains(res.assignment.sets[k], i)) continue;
        res.assignment.sets[k].push_back(i);
        ++used[i];
        ++placed;
        break;
      }
    }
    if (placed == 0) break;
  }
  res.value = system_throughput(res.assignment, s);
  res.trace.combined_value = res.value;
  res.trace.winner = "greedy";
  return res;
}

AlgoResult random_baseline(const Scenario& s, std::mt19937_64& rng) {
  validate(s);
  const int m = s.num_channels();
  std::vector<int> copies;
  for (int i = 0; i < s.num_sus(); ++i)
    copies.insert(copies.end(), s.sus[i].budget, i);
  std::shuffle(copies.begin(), copies.end(), rng);

  AlgoResult res;
  res.assignment = empty_assignment(s);
  std::vector<int> eligible;
  for (int su : copies) {
    eligible.clear();
    for (int k = 0; k < m; ++k)
      if (!contains(res.assignment.sets[k], su)) eligible.push_back(k);
    if (eligible.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, eligible.size() - 1);
    res.assignment.sets[eligible[pick(rng)]].push_back(su);
  }
  res.value = system_throughput(res.assignment, s);
  res.trace.combined_value = res.value;
  res.trace.winner = "random";
  return res;
}

AlgoResult brute_force_opt(const Scenario& s, std::uint64_t cap) {
  validate(s);
  const int m = s.num_channels();
  const int n = s.num_sus();
  if (n > 16 || m > 20)
    throw std::invalid_argument("brute_force_opt: instance too large (N <= 16, M <= 20)");

  // Per-SU candidate channel subsets (any size up to the budget).
  std::vector<std::vector<std::uint32_t>> choices(n);
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
      if (std::popcount(mask) <= s.sus[i].budget) choices[i].push_back(mask);
    if (space > cap / choices[i].size())
      throw std::invalid_argument(strcat_(
          "brute_force_opt: search space exceeds cap ", cap));
    space *= choices[i].size();
  }

  // Memoized channel values indexed by SU membership mask; -1 = not yet
  // computed (true values are nonnegative).
  std::vector<std::vector<double>> table(
      m, std::vector<double>(1u << n, -1.0));
  std::vector<int> members;
  auto value_of = [&](int k, std::uint32_t su_mask) {
    double& v = table[k][su_mask];
    if (v < 0.0) {
      members.clear();
      for (int i = 0; i < n; ++i)
        if (su_mask & (1u << i)) members.push_back(i);
      v = channel_throughput(members, k, s);
    }
    return v;
  };

  std::vector<std::uint32_t> channel_masks(m, 0);  // SU membership per channel
  std::vector<std::uint32_t> current(n, 0), best_choice(n, 0);
  double best = -1.0;

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      double total = 0.0;
      for (int k = 0; k < m; ++k) total += value_of(k, channel_masks[k]);
      if (total > best) {
        best = total;
        best_choice = current;
      }
      return;
    }
    for (std::uint32_t cm : choices[i]) {
      current[i] = cm;
      for (int k = 0; k < m; ++k)
        if (cm & (1u << k)) channel_masks[k] |= 1u << i;
      self(self, i + 1);
      for (int k = 0; k < m; ++k)
        if (cm & (1u << k)) channel_masks[k] &= ~(1u << i);
    }
  };
  dfs(dfs, 0);

  AlgoResult res;
  res.assignment = empty_assignment(s);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      if (best_choice[i] & (1u << k)) res.assignment.sets[k].push_back(i);
  res.value = system_throughput(res.assignment, s);
  res.trace.combined_value = res.value;
  res.trace.winner = "brute-force";
  return res;
}

}  // namespace crsense
