#include "crsense/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace crsense {

// Hungarian algorithm with row/column potentials on a square cost matrix
// (cost = -weight, dummy rows/columns cost 0). Finds a minimum-cost perfect
// matching of the padded matrix, i.e. a maximum-weight matching of the
// original graph when weights are nonnegative.
Matching max_weight_matching(const BipartiteGraph& g) {
  for (double x : g.w)
    if (x < 0.0) throw std::invalid_argument("edge weights must be nonnegative");

  const int n = std::max(g.n_left, g.n_right);
  Matching result;
  result.left_to_right.assign(g.n_left, -1);
  result.right_to_left.assign(g.n_right, -1);
  if (n == 0) return result;

  auto cost = [&](int i, int j) -> double {
    if (i < g.n_left && j < g.n_right) return -g.weight(i, j);
    return 0.0;
  };

  const double kInf = std::numeric_limits<double>::infinity();
  // 1-based arrays; p[j] = row matched to column j, p[0] = current row
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    // augment along the alternating path
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  for (int j = 1; j <= n; ++j) {
    const int i = p[j] - 1;
    const int r = j - 1;
    if (i < g.n_left && r < g.n_right) {
      result.left_to_right[i] = r;
      result.right_to_left[r] = i;
      result.total_weight += g.weight(i, r);
    }
  }
  return result;
}

}  // namespace crsense
