#include "mpldpc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace mpldpc {

double sigma_from_ebn0(const NoiseSpec& spec) {
  if (!std::isfinite(spec.eb_n0_db))
    throw std::invalid_argument("sigma_from_ebn0: Eb/N0 must be finite");
  if (!(spec.rate > 0.0) || spec.rate > 1.0)
    throw std::invalid_argument("sigma_from_ebn0: rate must lie in (0, 1]");
  const double eb_n0 = std::pow(10.0, spec.eb_n0_db / 10.0);
  return std::sqrt(1.0 / (2.0 * spec.rate * eb_n0));
}

std::vector<double> bpsk_symbols(const BinaryWord& codeword) {
  std::vector<double> s(codeword.size());
  for (std::size_t j = 0; j < codeword.size(); ++j) s[j] = codeword[j] ? 1.0 : -1.0;
  return s;
}

ChannelFrame transmit(const BinaryWord& codeword, double sigma, SplitMix64& stream) {
  if (!(sigma > 0.0)) throw std::invalid_argument("transmit: sigma must be positive");
  ChannelFrame frame;
  frame.codeword = codeword;
  frame.symbols = bpsk_symbols(codeword);
  frame.sigma = sigma;
  frame.received.resize(frame.symbols.size());
  for (std::size_t j = 0; j < frame.symbols.size(); ++j)
    frame.received[j] = frame.symbols[j] + sigma * stream.next_gaussian();
  return frame;
}

}  // namespace mpldpc
