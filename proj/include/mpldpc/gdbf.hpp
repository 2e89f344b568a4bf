#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpldpc/decoder_common.hpp"
#include "mpldpc/parity_check_matrix.hpp"

namespace mpldpc {

struct GdbfParams {
  int i_max = 100;
  FlipMode flip_mode = FlipMode::kSingle;
  double theta = 0.0;  // multi mode flips every bit with energy below this
};

// Per-bit inversion energy for gradient-descent bit flipping:
// E_j = x_j * r_j + sum over this bit's clauses of the clause sign
// (+1 satisfied, -1 violated). Low energy marks a bit whose flip is likely
// to help. Exposed for tests; x holds the current bipolar decisions.
std::vector<double> gdbf_energies(std::span<const double> r, const ParityCheckMatrix& h,
                                  std::span<const std::int8_t> x);

// Bit-flipping decoder. Starts from the signs of r, stops on a zero
// syndrome or after i_max flip rounds. Single mode flips the minimum-energy
// bit each round (ties to the lowest index); multi mode flips everything
// below theta and stops early if no bit qualifies, since the state would
// never change again.
DecodeOutcome gdbf_decode(std::span<const double> r, const ParityCheckMatrix& h,
                          const GdbfParams& params);

}  // namespace mpldpc
