#include "mpldpc/spa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mpldpc {

namespace {

// atanh blows up at +/-1; tanh of a clipped message cannot quite reach it,
// but the product of many near-one factors can round there.
constexpr double kAtanhGuard = 1.0 - 1e-15;

inline double clip(double v, double bound) { return std::clamp(v, -bound, bound); }

}  // namespace

DecodeOutcome spa_decode(std::span<const double> r, const ParityCheckMatrix& h, double sigma,
                         const SpaParams& params) {
  if (static_cast<int>(r.size()) != h.variable_count())
    throw std::invalid_argument("spa_decode: input length does not match variable count");
  if (!(sigma > 0.0)) throw std::invalid_argument("spa_decode: sigma must be positive");
  if (params.i_max < 1) throw std::invalid_argument("spa_decode: i_max must be at least 1");
  if (!(params.llr_clip > 0.0)) throw std::invalid_argument("spa_decode: llr_clip must be positive");

  const int m = h.clause_count();
  const int n = h.variable_count();

  // Edges numbered row-major: edge_base[i] is the first edge of check i.
  std::vector<int> edge_base(m + 1, 0);
  for (int i = 0; i < m; ++i)
    edge_base[i + 1] = edge_base[i] + static_cast<int>(h.row_support(i).size());
  const int edges = edge_base[m];
  std::vector<std::vector<int>> var_edges(n);
  for (int i = 0; i < m; ++i) {
    const auto& row = h.row_support(i);
    for (std::size_t a = 0; a < row.size(); ++a) var_edges[row[a]].push_back(edge_base[i] + a);
  }

  std::vector<double> llr(n);
  const double scale = -2.0 / (sigma * sigma);
  for (int j = 0; j < n; ++j) llr[j] = scale * r[j];

  std::vector<double> var_to_check(edges);
  std::vector<double> check_to_var(edges, 0.0);
  for (int j = 0; j < n; ++j)
    for (int e : var_edges[j]) var_to_check[e] = llr[j];

  DecodeOutcome out;
  BinaryWord u(n);
  std::vector<double> tanh_half;
  std::vector<double> prefix, suffix;
  int iteration = 0;

  for (;;) {
    // Posterior and hard decision; the first pass sees only the channel.
    bool all_satisfied = true;
    for (int j = 0; j < n; ++j) {
      double posterior = llr[j];
      for (int e : var_edges[j]) posterior += check_to_var[e];
      u[j] = posterior < 0.0 ? 1 : 0;
    }
    for (int i = 0; i < m && all_satisfied; ++i) {
      std::uint8_t parity = 0;
      for (int j : h.row_support(i)) parity ^= u[j];
      if (parity) all_satisfied = false;
    }
    if (all_satisfied) {
      out.converged = true;
      break;
    }
    if (iteration >= params.i_max) break;

    // Check node update: extrinsic tanh products via prefix/suffix sweeps.
    for (int i = 0; i < m; ++i) {
      const int base = edge_base[i];
      const int deg = edge_base[i + 1] - base;
      tanh_half.resize(deg);
      prefix.assign(deg + 1, 1.0);
      suffix.assign(deg + 1, 1.0);
      for (int a = 0; a < deg; ++a) tanh_half[a] = std::tanh(0.5 * var_to_check[base + a]);
      for (int a = 0; a < deg; ++a) prefix[a + 1] = prefix[a] * tanh_half[a];
      for (int a = deg - 1; a >= 0; --a) suffix[a] = suffix[a + 1] * tanh_half[a];
      for (int a = 0; a < deg; ++a) {
        const double prod = clip(prefix[a] * suffix[a + 1], kAtanhGuard);
        check_to_var[base + a] = clip(2.0 * std::atanh(prod), params.llr_clip);
      }
    }

    // Variable node update: total minus own incoming message.
    for (int j = 0; j < n; ++j) {
      double total = llr[j];
      for (int e : var_edges[j]) total += check_to_var[e];
      for (int e : var_edges[j]) var_to_check[e] = clip(total - check_to_var[e], params.llr_clip);
    }
    ++iteration;
  }

  out.iterations_used = iteration;
  out.decision = u;
  return out;
}

}  // namespace mpldpc
