#pragma once

#include <vector>

#include "mpldpc/parity_check_matrix.hpp"
#include "mpldpc/rng.hpp"

namespace mpldpc {

struct NoiseSpec {
  double eb_n0_db = 0.0;
  double rate = 0.5;  // code rate k/n, must lie in (0, 1]
};

// Noise standard deviation for BPSK with unit symbol energy:
// sigma = sqrt(1 / (2 * rate * 10^(EbN0_dB/10))).
double sigma_from_ebn0(const NoiseSpec& spec);

// Antipodal map: bit 0 -> -1, bit 1 -> +1.
std::vector<double> bpsk_symbols(const BinaryWord& codeword);

struct ChannelFrame {
  BinaryWord codeword;
  std::vector<double> symbols;   // modulated +/-1 values
  std::vector<double> received;  // symbols plus N(0, sigma^2) noise
  double sigma = 0.0;
};

// Draws one noise sample per symbol from the given stream, in index order.
ChannelFrame transmit(const BinaryWord& codeword, double sigma, SplitMix64& stream);

}  // namespace mpldpc
