#pragma once

#include <vector>

namespace crsense {

// Dense weighted bipartite graph. Weights must be nonnegative.
struct BipartiteGraph {
  int n_left = 0;
  int n_right = 0;
  std::vector<double> w;  // row-major, n_left * n_right

  double weight(int l, int r) const { return w[static_cast<size_t>(l) * n_right + r]; }
  double& weight(int l, int r) { return w[static_cast<size_t>(l) * n_right + r]; }
};

struct Matching {
  std::vector<int> left_to_right;  // -1 if unmatched
  std::vector<int> right_to_left;  // -1 if unmatched
  double total_weight = 0.0;
};

// Exact maximum-weight bipartite matching (Hungarian method with potentials
// on a zero-padded square matrix). With nonnegative weights the result is a
// maximum-weight matching; zero-weight edges may or may not be included.
Matching max_weight_matching(const BipartiteGraph& graph);

}  // namespace crsense
