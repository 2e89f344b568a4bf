#include "mpldpc/margin_prop.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mpldpc {

MpResult mp(std::span<const double> y, double tau) {
  if (y.empty()) throw std::invalid_argument("mp: score vector is empty");
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("mp: tau must be positive and finite");
  for (double v : y)
    if (!std::isfinite(v)) throw std::invalid_argument("mp: scores must be finite");

  std::vector<double> sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  // k = 1 is always valid: y_(1) > y_(1) - tau. The valid prefixes are
  // contiguous, but scanning all k and keeping the last valid one costs the
  // same and does not lean on that.
  double prefix = 0.0;
  double zeta = sorted[0] - tau;
  for (std::size_t k = 1; k <= sorted.size(); ++k) {
    prefix += sorted[k - 1];
    const double candidate = (prefix - tau) / static_cast<double>(k);
    if (sorted[k - 1] > candidate) zeta = candidate;
  }

  MpResult res;
  res.zeta = zeta;
  res.scores.assign(y.size(), 0.0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double margin = y[i] - zeta;
    if (margin > 0.0) {
      res.scores[i] = margin / tau;
      res.support.push_back(static_cast<int>(i));
    }
  }
  return res;
}

std::vector<double> mp_scores(std::span<const double> y, double tau) {
  return mp(y, tau).scores;
}

}  // namespace mpldpc
