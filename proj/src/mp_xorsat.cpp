#include "mpldpc/mp_xorsat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpldpc/margin_prop.hpp"

namespace mpldpc {

namespace {

constexpr double kTanhFloor = 1e-12;
constexpr double kTanhCeil = 1.0 - 1e-12;

inline std::int8_t sign_of(double r) { return r < 0.0 ? -1 : +1; }  // sign(0) = +1

void check_input(std::span<const double> r, const ParityCheckMatrix& h, const char* who) {
  if (static_cast<int>(r.size()) != h.variable_count())
    throw std::invalid_argument(std::string(who) + ": input length " +
                                std::to_string(r.size()) + " does not match variable count " +
                                std::to_string(h.variable_count()));
}

std::vector<double> clause_scores(const DecoderState& s, const ParityCheckMatrix& h) {
  std::vector<double> z(h.clause_count());
  for (int i = 0; i < h.clause_count(); ++i) {
    double sum = 0.0;
    for (int j : h.row_support(i)) sum += s.q[j];
    z[i] = sum;
  }
  return z;
}

// Stabilized log(sum_{i in set} exp(z_i) + exp(q_min)); the sentinel keeps
// the value finite when the set is empty (result is then exactly q_min).
double lse_with_floor(const std::vector<double>& z, const std::vector<std::uint8_t>& sat_mask,
                      bool satisfied_set, double q_min) {
  double peak = q_min;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (static_cast<bool>(sat_mask[i]) == satisfied_set) peak = std::max(peak, z[i]);
  double sum = std::exp(q_min - peak);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (static_cast<bool>(sat_mask[i]) == satisfied_set) sum += std::exp(z[i] - peak);
  return peak + std::log(sum);
}

// Rectified margins for one clause set. Clauses of the other set enter the
// mp() vector at the q_min floor, so the margin budget is always spread
// over a fixed-length vector; floor entries can carry margin too once zeta
// drops below q_min, and then they count like any other position. A set
// with no members at all is skipped entirely: the matching sum in the exact
// gradient is empty, so the surrogate contributes nothing either, rather
// than normalizing a pure-floor vector into uniform mass.
struct SetMargins {
  std::vector<double> margin;        // [y_i - zeta]_+ over the padded vector
  std::vector<std::uint8_t> active;  // 1 iff y_i > zeta
  double zeta = 0.0;
  bool present = false;              // set had at least one clause
};

SetMargins set_margins(const std::vector<double>& z, const std::vector<std::uint8_t>& sat_mask,
                       bool satisfied_set, const MpHyperParams& p) {
  SetMargins out;
  out.margin.assign(z.size(), 0.0);
  out.active.assign(z.size(), 0);
  std::vector<double> y(z.size());
  int members = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const bool in_set = static_cast<bool>(sat_mask[i]) == satisfied_set;
    y[i] = in_set ? z[i] : p.q_min;
    members += in_set;
  }
  if (members == 0) return out;
  out.present = true;
  const MpResult res = mp(y, p.tau);
  out.zeta = res.zeta;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double margin = y[i] - res.zeta;
    if (margin > 0.0) {
      out.margin[i] = margin;
      out.active[i] = 1;
    }
  }
  return out;
}

std::vector<double> mp_gradient_inner(const DecoderState& s, const ParityCheckMatrix& h,
                                      std::span<const double> r, const MpHyperParams& p,
                                      const SetMargins& sat, const SetMargins& unsat) {
  const int n = h.variable_count();
  std::vector<double> g(n);
  for (int j = 0; j < n; ++j) {
    double num = 0.0;
    int active_count = 0;
    for (int i : h.col_support(j)) {
      num += sat.margin[i] - unsat.margin[i];
      active_count += sat.active[i] + unsat.active[i];
    }
    const double check_term = active_count > 0 ? num / (p.tau * active_count) : 0.0;
    const double channel_term = p.normalization ? r[j] * s.d[j] : 0.0;
    g[j] = check_term + channel_term;
  }
  return g;
}

// Flip selection on the pre-update confidences. Multi mode takes everything
// below theta; single mode takes the most negative one, ties to the lowest
// index.
std::vector<int> select_flips(const DecoderState& s, const MpHyperParams& p) {
  std::vector<int> flips;
  if (p.flip_mode == FlipMode::kMulti) {
    for (std::size_t j = 0; j < s.q.size(); ++j)
      if (s.q[j] < p.theta) flips.push_back(static_cast<int>(j));
  } else {
    int best = -1;
    for (std::size_t j = 0; j < s.q.size(); ++j)
      if (s.q[j] < p.theta && (best < 0 || s.q[j] < s.q[best]))
        best = static_cast<int>(j);
    if (best >= 0) flips.push_back(best);
  }
  return flips;
}

// The update round shared by step() and decode(). Expects sat_mask current
// and at least one violated clause.
int update_round(DecoderState& s, const ParityCheckMatrix& h, std::span<const double> r,
                 const MpHyperParams& p) {
  const std::vector<double> z = clause_scores(s, h);
  const SetMargins sat = set_margins(z, s.sat_mask, true, p);
  const SetMargins unsat = set_margins(z, s.sat_mask, false, p);

  const std::vector<int> flips = select_flips(s, p);
  for (int j : flips) s.d[j] = -s.d[j];

  // Margins and supports stem from the pre-flip clause partition; the
  // channel term sees the flipped decisions.
  const std::vector<double> g = mp_gradient_inner(s, h, r, p, sat, unsat);
  for (std::size_t j = 0; j < s.q.size(); ++j) {
    double q = s.q[j] + p.eta * g[j];
    if (p.clamp_q && q > 0.0) q = 0.0;
    s.q[j] = q;
  }
  if (p.reset_q_on_flip)
    for (int j : flips) s.q[j] = 0.0;
  ++s.iteration;
  return static_cast<int>(flips.size());
}

}  // namespace

void MpHyperParams::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("MpHyperParams: tau must be positive");
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw std::invalid_argument("MpHyperParams: eta must be positive");
  if (i_max < 1) throw std::invalid_argument("MpHyperParams: i_max must be at least 1");
  if (!std::isfinite(theta)) throw std::invalid_argument("MpHyperParams: theta must be finite");
  if (!std::isfinite(q_min) || q_min >= theta)
    throw std::invalid_argument("MpHyperParams: q_min must lie below theta");
}

MpHyperParams MpHyperParams::resolved(const ParityCheckMatrix& h) const {
  MpHyperParams p = *this;
  if (!(p.tau > 0.0)) p.tau = static_cast<double>(h.clause_count());
  p.validate();
  return p;
}

DecoderState initialize(std::span<const double> r, const ParityCheckMatrix& h,
                        const MpHyperParams& params) {
  check_input(r, h, "initialize");
  for (double v : r)
    if (!std::isfinite(v)) throw std::invalid_argument("initialize: inputs must be finite");

  DecoderState s;
  s.d.resize(r.size());
  s.q.resize(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    s.d[j] = sign_of(r[j]);
    const double conf = std::clamp(std::abs(std::tanh(r[j])), kTanhFloor, kTanhCeil);
    double q = s.d[j] * std::log(conf);
    if (params.clamp_q && q > 0.0) q = 0.0;
    s.q[j] = q;
  }
  s.sat_mask.assign(h.clause_count(), 0);
  classify(s, h);
  return s;
}

int classify(DecoderState& state, const ParityCheckMatrix& h) {
  if (static_cast<int>(state.d.size()) != h.variable_count())
    throw std::invalid_argument("classify: state size does not match variable count");
  if (state.sat_mask.size() != static_cast<std::size_t>(h.clause_count()))
    state.sat_mask.assign(h.clause_count(), 0);
  int unsat = 0;
  for (int i = 0; i < h.clause_count(); ++i) {
    int ones = 0;
    for (int j : h.row_support(i)) ones += state.d[j] > 0;
    const bool satisfied = (ones % 2) == 0;
    state.sat_mask[i] = satisfied ? 1 : 0;
    unsat += !satisfied;
  }
  return unsat;
}

BinaryWord hard_decision(const DecoderState& state) {
  BinaryWord u(state.d.size());
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = state.d[j] > 0 ? 1 : 0;
  return u;
}

double h_log(const DecoderState& state, const ParityCheckMatrix& h, double q_min) {
  const std::vector<double> z = clause_scores(state, h);
  return lse_with_floor(z, state.sat_mask, true, q_min) -
         lse_with_floor(z, state.sat_mask, false, q_min);
}

double h_ldpc(const DecoderState& state, const ParityCheckMatrix& h, std::span<const double> r,
              double q_min) {
  check_input(r, h, "h_ldpc");
  double agreement = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) agreement += r[j] * state.d[j] * state.q[j];
  return h_log(state, h, q_min) + agreement;
}

std::vector<double> gradient_exact(const DecoderState& state, const ParityCheckMatrix& h,
                                   std::span<const double> r, double q_min) {
  check_input(r, h, "gradient_exact");
  const std::vector<double> z = clause_scores(state, h);

  // Per-set softmax weights w_i = exp(z_i) / (sum_set exp(z) + exp(q_min)),
  // computed against the set peak so large |q| cannot overflow.
  std::vector<double> w(z.size(), 0.0);
  for (bool satisfied_set : {true, false}) {
    double peak = q_min;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (static_cast<bool>(state.sat_mask[i]) == satisfied_set) peak = std::max(peak, z[i]);
    double denom = std::exp(q_min - peak);
    for (std::size_t i = 0; i < z.size(); ++i)
      if (static_cast<bool>(state.sat_mask[i]) == satisfied_set) denom += std::exp(z[i] - peak);
    for (std::size_t i = 0; i < z.size(); ++i)
      if (static_cast<bool>(state.sat_mask[i]) == satisfied_set)
        w[i] = std::exp(z[i] - peak) / denom;
  }

  std::vector<double> g(h.variable_count());
  for (int j = 0; j < h.variable_count(); ++j) {
    double sum = 0.0;
    for (int i : h.col_support(j)) sum += state.sat_mask[i] ? w[i] : -w[i];
    g[j] = sum + r[j] * state.d[j];
  }
  return g;
}

std::vector<double> gradient_mp(const DecoderState& state, const ParityCheckMatrix& h,
                                std::span<const double> r, const MpHyperParams& params) {
  check_input(r, h, "gradient_mp");
  const MpHyperParams p = params.resolved(h);
  const std::vector<double> z = clause_scores(state, h);
  const SetMargins sat = set_margins(z, state.sat_mask, true, p);
  const SetMargins unsat = set_margins(z, state.sat_mask, false, p);
  return mp_gradient_inner(state, h, r, p, sat, unsat);
}

StepResult step(DecoderState& state, const ParityCheckMatrix& h, std::span<const double> r,
                const MpHyperParams& params) {
  check_input(r, h, "step");
  const MpHyperParams p = params.resolved(h);
  StepResult res;
  res.unsat_before = classify(state, h);
  if (res.unsat_before == 0) {
    res.already_satisfied = true;
    return res;
  }
  res.flips = update_round(state, h, r, p);
  return res;
}

DecodeOutcome decode(std::span<const double> r, const ParityCheckMatrix& h,
                     const MpHyperParams& params) {
  const MpHyperParams p = params.resolved(h);
  DecoderState s = initialize(r, h, p);
  DecodeOutcome out;
  const int m = h.clause_count();
  for (;;) {
    const int unsat = classify(s, h);
    if (p.record_trajectory) out.satisfied_trajectory.push_back(m - unsat);
    if (unsat == 0) {
      out.converged = true;
      break;
    }
    if (s.iteration >= p.i_max) break;
    update_round(s, h, r, p);
  }
  out.iterations_used = s.iteration;
  out.decision = hard_decision(s);
  return out;
}

}  // namespace mpldpc
