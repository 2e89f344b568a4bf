#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mpldpc/channel.hpp"
#include "mpldpc/rng.hpp"

using namespace mpldpc;

namespace {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("sigma formula hits hand-computed values") {
  // sqrt(1 / (2 * rate * 10^(snr/10))), evaluated offline
  CHECK(sigma_from_ebn0({0.0, 0.5}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sigma_from_ebn0({0.0, 1.0}) == doctest::Approx(0.70710678).epsilon(1e-7));
  // rate 8/32 = 0.25, the builtin (32,8) operating points
  CHECK(sigma_from_ebn0({1.0, 0.25}) == doctest::Approx(1.2604191).epsilon(1e-6));
  CHECK(sigma_from_ebn0({3.0, 0.25}) == doctest::Approx(1.0011868).epsilon(1e-6));
  CHECK(sigma_from_ebn0({6.0, 0.25}) == doctest::Approx(0.7087857).epsilon(1e-6));
}

TEST_CASE("sigma decreases with snr and with rate") {
  double prev = sigma_from_ebn0({-2.0, 0.5});
  for (double snr = -1.0; snr <= 8.0; snr += 1.0) {
    const double s = sigma_from_ebn0({snr, 0.5});
    CHECK(s < prev);
    prev = s;
  }
  CHECK(sigma_from_ebn0({2.0, 0.25}) > sigma_from_ebn0({2.0, 0.5}));
}

TEST_CASE("sigma rejects bad arguments") {
  CHECK_THROWS_AS(sigma_from_ebn0({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(sigma_from_ebn0({0.0, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(sigma_from_ebn0({0.0, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(sigma_from_ebn0({std::nan(""), 0.5}), std::invalid_argument);
}

TEST_CASE("bpsk maps 0 to -1 and 1 to +1") {
  const auto s = bpsk_symbols({0, 1, 1, 0});
  CHECK(s == std::vector<double>{-1.0, 1.0, 1.0, -1.0});
}

TEST_CASE("transmit is reproducible per (seed, frame) and varies across frames") {
  const BinaryWord cw = {0, 1, 0, 1, 1, 0, 0, 1};
  SplitMix64 a = frame_stream(42, 7);
  SplitMix64 b = frame_stream(42, 7);
  const auto fa = transmit(cw, 0.8, a);
  const auto fb = transmit(cw, 0.8, b);
  CHECK(fa.received == fb.received);

  SplitMix64 c = frame_stream(42, 8);
  const auto fc = transmit(cw, 0.8, c);
  CHECK(fa.received != fc.received);

  SplitMix64 d = frame_stream(43, 7);
  const auto fd = transmit(cw, 0.8, d);
  CHECK(fa.received != fd.received);

  CHECK_THROWS_AS(transmit(cw, 0.0, a), std::invalid_argument);
}

TEST_CASE("noise is centered with the requested variance") {
  const double sigma = 1.3;
  const int frames = 4000;
  const BinaryWord cw(64, 0);  // symbols all -1
  double sum = 0.0, sq = 0.0;
  std::int64_t count = 0;
  std::int64_t inside_one_sigma = 0;
  for (int f = 0; f < frames; ++f) {
    SplitMix64 stream = frame_stream(1234, f);
    const auto frame = transmit(cw, sigma, stream);
    for (double y : frame.received) {
      const double noise = y - (-1.0);
      sum += noise;
      sq += noise * noise;
      inside_one_sigma += std::abs(noise) <= sigma;
      ++count;
    }
  }
  const double mean = sum / count;
  const double var = sq / count - mean * mean;
  CHECK(std::abs(mean) < 0.01);                       // SE ~ sigma/sqrt(256k) ~ 0.0026
  CHECK(var == doctest::Approx(sigma * sigma).epsilon(0.02));
  // P(|N(0,s^2)| <= s) = 0.6827
  CHECK(static_cast<double>(inside_one_sigma) / count == doctest::Approx(0.6827).epsilon(0.01));
}

TEST_CASE("hard-decision error rate matches the Q function") {
  // bit flips when noise pushes a -1 symbol past 0: probability Q(1/sigma)
  const double sigma = 0.9;
  const BinaryWord cw(128, 0);
  std::int64_t flips = 0, count = 0;
  for (int f = 0; f < 3000; ++f) {
    SplitMix64 stream = frame_stream(777, f);
    const auto frame = transmit(cw, sigma, stream);
    for (double y : frame.received) {
      flips += y > 0.0;
      ++count;
    }
  }
  const double expected = q_function(1.0 / sigma);
  CHECK(static_cast<double>(flips) / count == doctest::Approx(expected).epsilon(0.03));
}

TEST_CASE("distinct frame streams look uncorrelated") {
  const int samples = 20000;
  SplitMix64 a = frame_stream(5, 100);
  SplitMix64 b = frame_stream(5, 101);
  double dot = 0.0;
  for (int i = 0; i < samples; ++i) dot += a.next_gaussian() * b.next_gaussian();
  CHECK(std::abs(dot / samples) < 0.02);
}

TEST_CASE("uniform doubles stay in [0,1) with the right mean") {
  SplitMix64 rng(2024);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("next_below is unbiased enough and in range") {
  SplitMix64 rng(31337);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.next_below(7);
    REQUIRE(v < 7);
    ++counts[static_cast<int>(v)];
  }
  for (int c : counts) CHECK(c == doctest::Approx(10000).epsilon(0.05));
}

}  // TEST_SUITE
