#pragma once

#include <span>

#include "mpldpc/decoder_common.hpp"
#include "mpldpc/parity_check_matrix.hpp"

namespace mpldpc {

struct SpaParams {
  int i_max = 100;
  double llr_clip = 30.0;  // messages are clamped to [-llr_clip, llr_clip]
};

// Sum-product decoding with a flooding schedule. Channel LLRs are computed
// internally as -2*r/sigma^2 (log P(bit 0)/P(bit 1); the antipodal map puts
// bit 0 at -1, so negative samples favor zero). The hard decision is checked
// against the syndrome before every message round, so a noiseless input
// finishes with zero iterations.
DecodeOutcome spa_decode(std::span<const double> r, const ParityCheckMatrix& h, double sigma,
                         const SpaParams& params);

}  // namespace mpldpc
