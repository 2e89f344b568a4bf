#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpldpc/decoder_common.hpp"
#include "mpldpc/parity_check_matrix.hpp"

namespace mpldpc {

// Margin-propagation XOR-SAT decoder. Each variable carries a bipolar
// decision d_j and a log-confidence q_j <= 0 (0 means certain). Clauses are
// split by the current decisions into satisfied and violated sets; the
// decoder ascends an objective that rewards confident satisfied clauses and
// penalizes confident violated ones, flipping decisions whose confidence
// drops below a threshold.
struct MpHyperParams {
  double tau = 0.0;       // margin budget; <= 0 selects the clause count M
  double theta = -0.1;    // flip threshold on q
  double eta = 0.005;     // gradient step size
  int i_max = 100;        // update-round budget
  double q_min = -30.0;   // floor score standing in for an absent clause set
  FlipMode flip_mode = FlipMode::kMulti;
  bool clamp_q = true;            // keep q <= 0 after init and each update
  bool reset_q_on_flip = false;   // flipped bits restart at q = 0
  bool normalization = true;      // include the r_j*d_j channel-agreement term
  bool record_trajectory = false;

  // Copy with tau defaulted to the clause count of h, validated.
  MpHyperParams resolved(const ParityCheckMatrix& h) const;
  void validate() const;
};

struct DecoderState {
  std::vector<std::int8_t> d;        // bipolar decisions, +1 or -1
  std::vector<double> q;             // log-confidences
  std::vector<std::uint8_t> sat_mask;  // per clause: 1 iff satisfied by d
  int iteration = 0;                 // update rounds applied so far
};

// d_j = sign(r_j) with sign(0) = +1; q_j = d_j * log|tanh r_j|, the tanh
// magnitude clamped to [1e-12, 1 - 1e-12] so q stays finite. With clamp_q
// the positive initial values (bits the channel calls one) start at 0.
DecoderState initialize(std::span<const double> r, const ParityCheckMatrix& h,
                        const MpHyperParams& params);

// Recomputes sat_mask from d; returns the number of violated clauses.
// A clause is satisfied exactly when the syndrome bit of the hard decision
// is zero.
int classify(DecoderState& state, const ParityCheckMatrix& h);

BinaryWord hard_decision(const DecoderState& state);

// Objective pieces, all evaluated on the clause partition stored in
// sat_mask (the partition is treated as frozen; callers refresh it with
// classify when they want it current). Clause score z_i is the sum of q_j
// over the clause. Each set is reduced with log(sum exp(z_i) + exp(q_min));
// an empty set therefore contributes exactly q_min.
double h_log(const DecoderState& state, const ParityCheckMatrix& h, double q_min);

// h_log plus the channel-agreement term sum_j r_j * d_j * q_j.
double h_ldpc(const DecoderState& state, const ParityCheckMatrix& h,
              std::span<const double> r, double q_min);

// Exact partial derivatives of h_ldpc in q (partition frozen): per-set
// softmax weights with exp(q_min) folded into the denominator, plus r_j*d_j.
std::vector<double> gradient_exact(const DecoderState& state, const ParityCheckMatrix& h,
                                   std::span<const double> r, double q_min);

// Margin-propagation surrogate of the gradient. The softmax weights are
// replaced by rectified margins [z_i - zeta]_+ from the mp() primitive, run
// per clause set over the full clause vector with q_min standing in for
// clauses of the other set. A_j counts this variable's clauses inside either
// support; a variable supported nowhere gets a zero check term. An empty
// clause set contributes nothing, matching the empty sum in gradient_exact.
std::vector<double> gradient_mp(const DecoderState& state, const ParityCheckMatrix& h,
                                std::span<const double> r, const MpHyperParams& params);

struct StepResult {
  bool already_satisfied = false;  // no update happened; state was a solution
  int unsat_before = 0;            // violated clauses seen at entry
  int flips = 0;                   // decisions inverted this round
};

// One decoding round: classify, early-exit if everything is satisfied,
// otherwise flip decisions with q below theta (all of them in multi mode,
// the most negative in single mode), then ascend q along the mp gradient.
// The gradient uses the clause partition from before the flips but the
// post-flip decisions in the channel term; flips do not touch q except
// through reset_q_on_flip.
StepResult step(DecoderState& state, const ParityCheckMatrix& h, std::span<const double> r,
                const MpHyperParams& params);

// Runs step until the state satisfies every clause or i_max rounds have
// been spent. converged reflects the final classification, so a state that
// becomes a solution on the last round still counts.
DecodeOutcome decode(std::span<const double> r, const ParityCheckMatrix& h,
                     const MpHyperParams& params);

}  // namespace mpldpc
