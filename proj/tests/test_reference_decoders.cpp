#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mpldpc/channel.hpp"
#include "mpldpc/codes.hpp"
#include "mpldpc/gdbf.hpp"
#include "mpldpc/gf2.hpp"
#include "mpldpc/rng.hpp"
#include "mpldpc/spa.hpp"

using namespace mpldpc;

namespace {

std::vector<BinaryWord> all_codewords(const ParityCheckMatrix& h) {
  const GeneratorMatrix gen = gaussian_generator(h);
  std::vector<BinaryWord> words;
  words.reserve(std::size_t{1} << gen.k);
  for (std::uint32_t m = 0; m < (1u << gen.k); ++m) {
    BinaryWord msg(gen.k);
    for (int b = 0; b < gen.k; ++b) msg[b] = (m >> b) & 1u;
    words.push_back(encode(gen, msg));
  }
  return words;
}

// Antipodal pattern scaled to a fixed confidence, optionally with one sign
// ruined. flip < 0 leaves the word clean.
std::vector<double> confident_input(const BinaryWord& c, double amp, int flip) {
  std::vector<double> r(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) r[j] = c[j] ? amp : -amp;
  if (flip >= 0) r[flip] = -r[flip];
  return r;
}

BinaryWord complement(const BinaryWord& u) {
  BinaryWord out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = u[j] ? 0 : 1;
  return out;
}

}  // namespace

TEST_SUITE("reference-decoders") {

TEST_CASE("noiseless inputs converge with zero message rounds") {
  const ParityCheckMatrix h = hamming74();
  for (const BinaryWord& c : all_codewords(h)) {
    const std::vector<double> r = confident_input(c, 5.0, -1);

    const DecodeOutcome spa = spa_decode(r, h, 1.0, SpaParams{});
    CHECK(spa.converged);
    CHECK(spa.iterations_used == 0);
    CHECK(spa.decision == c);

    for (FlipMode mode : {FlipMode::kSingle, FlipMode::kMulti}) {
      GdbfParams gp;
      gp.flip_mode = mode;
      const DecodeOutcome out = gdbf_decode(r, h, gp);
      CHECK(out.converged);
      CHECK(out.iterations_used == 0);
      CHECK(out.decision == c);
    }
  }
}

TEST_CASE("sum-product on confident single errors") {
  const ParityCheckMatrix h = hamming74();

  // Errors at bits of column degree one or two are corrected.
  for (const BinaryWord& c : all_codewords(h)) {
    for (int flip = 0; flip < 6; ++flip) {
      const DecodeOutcome out = spa_decode(confident_input(c, 5.0, flip), h, 1.0, SpaParams{});
      CHECK(out.converged);
      CHECK(out.decision == c);
    }
  }

  // The last bit sits in all three checks, so a confident error there
  // violates every clause at once. After one flooding round each degree-two
  // bit has collected two corrective messages of size about |llr| - 1.1
  // against its own channel belief of |llr| and flips; the result is a wrong
  // codeword exactly distance three from the transmitted one, and the
  // syndrome stop accepts it. This is a real failure mode of flooding with
  // early exit, pinned here so a refactor cannot change it silently.
  const BinaryWord detour = {0, 0, 1, 0, 1, 1, 0};
  for (const BinaryWord& c : all_codewords(h)) {
    const DecodeOutcome out = spa_decode(confident_input(c, 5.0, 6), h, 1.0, SpaParams{});
    CHECK(out.converged);
    CHECK(out.iterations_used == 1);
    CHECK(out.decision == xor_words(c, detour));
  }
}

TEST_CASE("sum-product iteration accounting on a stubborn bit") {
  // A wrong degree-one bit needs the extrinsic messages to outgrow its own
  // channel belief, which takes exactly two flooding rounds here.
  const ParityCheckMatrix h = hamming74();
  const BinaryWord zero(7, 0);
  const std::vector<double> r = confident_input(zero, 5.0, 0);

  SpaParams capped;
  capped.i_max = 1;
  const DecodeOutcome stuck = spa_decode(r, h, 1.0, capped);
  CHECK(!stuck.converged);
  CHECK(stuck.iterations_used == 1);

  const DecodeOutcome fixed = spa_decode(r, h, 1.0, SpaParams{});
  CHECK(fixed.converged);
  CHECK(fixed.iterations_used == 2);
  CHECK(fixed.decision == zero);
}

TEST_CASE("sum-product respects the antipodal symmetry") {
  // Negating the channel vector complements the decision: the all-ones word
  // is a codeword here (even row weights), so trajectories mirror exactly.
  const ParityCheckMatrix h = hamming74();
  const std::vector<BinaryWord> words = all_codewords(h);
  SplitMix64 rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryWord& c = words[rng.next_below(words.size())];
    ChannelFrame frame = transmit(c, 0.8, rng);

    const DecodeOutcome pos = spa_decode(frame.received, h, 0.8, SpaParams{});
    std::vector<double> negated = frame.received;
    for (double& v : negated) v = -v;
    const DecodeOutcome neg = spa_decode(negated, h, 0.8, SpaParams{});

    CHECK(neg.converged == pos.converged);
    CHECK(neg.iterations_used == pos.iterations_used);
    CHECK(neg.decision == complement(pos.decision));
  }
}

TEST_CASE("sum-product beats the raw hard decision at moderate noise") {
  const ParityCheckMatrix h = hamming74();
  const BinaryWord zero(7, 0);
  const double sigma = 0.59;  // around 4 dB for this rate
  std::int64_t raw_errors = 0, decoded_errors = 0;
  for (std::uint64_t f = 0; f < 400; ++f) {
    SplitMix64 stream = frame_stream(4242, f);
    const ChannelFrame frame = transmit(zero, sigma, stream);
    for (double v : frame.received) raw_errors += v >= 0.0;
    const DecodeOutcome out = spa_decode(frame.received, h, sigma, SpaParams{});
    decoded_errors += static_cast<std::int64_t>(hamming_distance(out.decision, zero));
  }
  CHECK(raw_errors > 0);
  CHECK(decoded_errors < raw_errors);
}

TEST_CASE("bit-flip energies count clause agreement") {
  const ParityCheckMatrix h = majority_code();
  const std::vector<double> r = {-2.0, 0.1, -2.0};
  const std::vector<std::int8_t> x = {-1, +1, -1};
  const std::vector<double> e = gdbf_energies(r, h, x);
  // Both clauses are violated; the middle bit pays for each of them.
  CHECK(e[0] == doctest::Approx(1.0));
  CHECK(e[1] == doctest::Approx(-1.9));
  CHECK(e[2] == doctest::Approx(1.0));

  // On a satisfied word every clause contributes +1.
  const std::vector<std::int8_t> ones = {+1, +1, +1};
  const std::vector<double> rising = {2.0, 3.0, 4.0};
  const std::vector<double> sat = gdbf_energies(rising, h, ones);
  CHECK(sat[0] == doctest::Approx(3.0));
  CHECK(sat[1] == doctest::Approx(5.0));
  CHECK(sat[2] == doctest::Approx(5.0));

  const std::vector<double> short_r = {1.0, 2.0};
  CHECK_THROWS_AS(gdbf_energies(short_r, h, ones), std::invalid_argument);
}

TEST_CASE("single mode flips the minimum-energy bit, ties to the lowest index") {
  const ParityCheckMatrix h = majority_code();
  const std::vector<double> r = {0.5, -5.0, 0.5};  // both outer bits tie at E = -0.5

  GdbfParams one_round;
  one_round.i_max = 1;
  const DecodeOutcome first = gdbf_decode(r, h, one_round);
  CHECK(!first.converged);
  CHECK(first.decision == BinaryWord{0, 0, 1});

  const DecodeOutcome full = gdbf_decode(r, h, GdbfParams{});
  CHECK(full.converged);
  CHECK(full.iterations_used == 2);
  CHECK(full.decision == BinaryWord{0, 0, 0});
}

TEST_CASE("multi mode flips in parallel and stalls when nothing qualifies") {
  const ParityCheckMatrix h = majority_code();
  const std::vector<double> r = {0.5, -5.0, 0.5};

  GdbfParams multi;
  multi.flip_mode = FlipMode::kMulti;
  const DecodeOutcome out = gdbf_decode(r, h, multi);
  CHECK(out.converged);
  CHECK(out.iterations_used == 1);  // both offending bits move together
  CHECK(out.decision == BinaryWord{0, 0, 0});

  multi.theta = -10.0;
  const DecodeOutcome stalled = gdbf_decode(r, h, multi);
  CHECK(!stalled.converged);
  CHECK(stalled.iterations_used == 0);
  CHECK(stalled.decision == BinaryWord{1, 0, 1});
}

TEST_CASE("single mode changes at most one bit per round") {
  const ParityCheckMatrix h = hamming74();
  const std::vector<double> r = {0.9, -5.0, 0.4, -5.0, -0.2, -5.0, -5.0};
  BinaryWord prev;
  GdbfParams p;
  for (int cap = 1; cap <= 5; ++cap) {
    p.i_max = cap;
    const BinaryWord now = gdbf_decode(r, h, p).decision;
    if (cap > 1) CHECK(hamming_distance(now, prev) <= 1);
    prev = now;
  }
}

TEST_CASE("bit flipping fixes confident single errors") {
  // The wrong bit is the unique energy minimum: all of its clauses complain,
  // while every correct bit keeps at least one satisfied clause.
  const ParityCheckMatrix h = hamming74();
  for (const BinaryWord& c : all_codewords(h)) {
    for (int flip = 0; flip < h.variable_count(); ++flip) {
      const DecodeOutcome out = gdbf_decode(confident_input(c, 5.0, flip), h, GdbfParams{});
      CHECK(out.converged);
      CHECK(out.decision == c);
    }
  }
}

}  // TEST_SUITE
