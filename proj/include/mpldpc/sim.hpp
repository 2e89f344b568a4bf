#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpldpc/gdbf.hpp"
#include "mpldpc/mp_xorsat.hpp"
#include "mpldpc/parity_check_matrix.hpp"
#include "mpldpc/spa.hpp"

namespace mpldpc {

enum class DecoderId { kMpXorSat, kSpa, kGdbf };

std::string decoder_label(DecoderId id);
DecoderId parse_decoder(const std::string& label);

enum class TransmitMode {
  kAllZero,         // send the zero codeword every frame
  kRandomCodeword,  // encode fresh random message bits per frame
};

struct StopRule {
  // Stop once this many frame errors have accumulated; values < 1 disable
  // the error target and the run uses the frame cap alone.
  std::int64_t target_frame_errors = 100;
  std::int64_t max_frames = 10'000'000;
};

struct SimConfig {
  std::string code_label;  // echoed into the CSV, not interpreted
  DecoderId decoder = DecoderId::kMpXorSat;
  MpHyperParams mp;
  SpaParams spa;
  GdbfParams gdbf;
  StopRule stop;
  std::uint64_t seed = 1;
  TransmitMode transmit = TransmitMode::kAllZero;
  int workers = 0;             // 0 = one per hardware thread
  bool llr_scale_input = false;  // hand 2r/sigma^2 to the flipping decoders
};

struct SimRecord {
  double snr_db = 0.0;
  std::int64_t frames = 0;
  std::int64_t bit_errors = 0;
  std::int64_t frame_errors = 0;
  double ber = 0.0;
  double fer = 0.0;
  double mean_iterations = 0.0;
  // Outcome split: exact match, a different codeword (undetectable error),
  // or a word that fails the syndrome (detectable failure).
  std::int64_t match = 0;
  std::int64_t valid_mismatch = 0;
  std::int64_t invalid = 0;
};

// One (decoder, SNR) operating point. Frames are dealt out in fixed-size
// batches; each frame's randomness comes from frame_stream(seed, index), so
// the outcome of frame i never depends on which worker ran it or how many
// workers there are. The stop rule is applied by scanning batch results in
// frame order, which keeps the reported aggregates identical for any worker
// count.
SimRecord run_point(const SimConfig& cfg, const ParityCheckMatrix& h, double snr_db);

std::vector<SimRecord> run_points(const SimConfig& cfg, const ParityCheckMatrix& h,
                                  const std::vector<double>& snrs_db);

// Hyperparameter grid for the margin-propagation decoder. Empty axes fall
// back to the value already in cfg.mp.
struct SweepGrid {
  std::vector<double> tau;
  std::vector<double> theta;
  std::vector<double> eta;
};

struct SweepRow {
  double tau = 0.0;
  double theta = 0.0;
  double eta = 0.0;
  SimRecord record;
};

// Cartesian product in (tau, theta, eta, snr) order, deterministic.
std::vector<SweepRow> sweep(const SimConfig& cfg, const ParityCheckMatrix& h,
                            const SweepGrid& grid, const std::vector<double>& snrs_db);

// Same operating point with the channel-agreement term on and off, matched
// seeds, for isolating what that term buys.
struct AblationResult {
  SimRecord with_channel_term;
  SimRecord without_channel_term;
};
AblationResult ablation(const SimConfig& cfg, const ParityCheckMatrix& h, double snr_db);

// CSV with a fixed column set; floats formatted with %.6g so files compare
// byte for byte across runs.
std::string csv_header();
std::string csv_row(const SimConfig& cfg, const ParityCheckMatrix& h, const SimRecord& rec);

}  // namespace mpldpc
