#pragma once

#include <span>
#include <vector>

namespace mpldpc {

struct MpResult {
  double zeta = 0.0;            // offset with sum_i [y_i - zeta]_+ = tau
  std::vector<double> scores;   // [y_i - zeta]_+ / tau, sums to one
  std::vector<int> support;     // indices with y_i strictly above zeta
};

// Margin propagation: normalizes a score vector by solving
// sum_i max(y_i - zeta, 0) = tau for the unique offset zeta, then reports
// the rectified margins divided by tau. Entries at or below zeta get an
// exact zero, which is the point of using this instead of softmax.
//
// Solved in closed form by sorting: with y descending and prefix sums S_k,
// the active set is the largest k with y_(k) > (S_k - tau)/k, and
// zeta = (S_k - tau)/k for that k. O(M log M), no iteration.
MpResult mp(std::span<const double> y, double tau);

std::vector<double> mp_scores(std::span<const double> y, double tau);

}  // namespace mpldpc
