#include "mpldpc/sim.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mpldpc/channel.hpp"
#include "mpldpc/gf2.hpp"
#include "mpldpc/rng.hpp"

namespace mpldpc {

namespace {

// Frames per scheduling unit. Fixed (not derived from the worker count) so
// the stop rule sees the same frame order no matter how the work is spread.
constexpr std::int64_t kBatchFrames = 1024;

enum Kind : std::uint8_t { kMatch = 0, kValidMismatch = 1, kInvalid = 2 };

struct FrameStats {
  std::int64_t bit_errors = 0;
  int iterations = 0;
  std::uint8_t kind = kMatch;
};

int effective_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string fmt_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string decoder_label(DecoderId id) {
  switch (id) {
    case DecoderId::kMpXorSat: return "mpxorsat";
    case DecoderId::kSpa: return "spa";
    case DecoderId::kGdbf: return "gdbf";
  }
  throw std::invalid_argument("decoder_label: unknown decoder id");
}

DecoderId parse_decoder(const std::string& label) {
  if (label == "mpxorsat") return DecoderId::kMpXorSat;
  if (label == "spa") return DecoderId::kSpa;
  if (label == "gdbf") return DecoderId::kGdbf;
  throw std::invalid_argument("unknown decoder '" + label + "' (expected mpxorsat, spa or gdbf)");
}

SimRecord run_point(const SimConfig& cfg, const ParityCheckMatrix& h, double snr_db) {
  if (cfg.stop.max_frames < 1)
    throw std::invalid_argument("run_point: max_frames must be at least 1");

  const int n = h.variable_count();
  const GeneratorMatrix gen = gaussian_generator(h);
  if (gen.k < 1)
    throw std::invalid_argument("run_point: code has no information bits (rank n), rate is zero");
  const double rate = static_cast<double>(gen.k) / n;
  const double sigma = sigma_from_ebn0({snr_db, rate});
  const MpHyperParams mp_params = cfg.mp.resolved(h);
  const double llr_scale = 2.0 / (sigma * sigma);

  auto run_frame = [&](std::int64_t index) -> FrameStats {
    SplitMix64 stream = frame_stream(cfg.seed, static_cast<std::uint64_t>(index));
    BinaryWord codeword;
    if (cfg.transmit == TransmitMode::kRandomCodeword) {
      BinaryWord message(gen.k);
      for (int b = 0; b < gen.k; ++b) message[b] = static_cast<std::uint8_t>(stream.next_u64() & 1);
      codeword = encode(gen, message);
    } else {
      codeword.assign(n, 0);
    }
    const ChannelFrame frame = transmit(codeword, sigma, stream);

    const std::vector<double>* input = &frame.received;
    std::vector<double> scaled;
    if (cfg.llr_scale_input && cfg.decoder != DecoderId::kSpa) {
      scaled.resize(frame.received.size());
      for (std::size_t j = 0; j < scaled.size(); ++j) scaled[j] = llr_scale * frame.received[j];
      input = &scaled;
    }

    DecodeOutcome res;
    switch (cfg.decoder) {
      case DecoderId::kMpXorSat: res = decode(*input, h, mp_params); break;
      case DecoderId::kSpa: res = spa_decode(*input, h, sigma, cfg.spa); break;
      case DecoderId::kGdbf: res = gdbf_decode(*input, h, cfg.gdbf); break;
    }
    if (res.converged != is_codeword(h, res.decision))
      throw std::logic_error("run_point: convergence flag disagrees with the syndrome");

    FrameStats st;
    st.bit_errors = static_cast<std::int64_t>(hamming_distance(res.decision, codeword));
    st.iterations = res.iterations_used;
    st.kind = st.bit_errors == 0 ? kMatch : (res.converged ? kValidMismatch : kInvalid);
    return st;
  };

  const int workers = effective_workers(cfg.workers);
  std::vector<FrameStats> slots(static_cast<std::size_t>(kBatchFrames));

  std::int64_t frames = 0, bit_errors = 0, frame_errors = 0;
  std::int64_t iteration_sum = 0;
  std::int64_t kind_counts[3] = {0, 0, 0};
  bool done = false;

  while (!done) {
    const std::int64_t lo = frames;
    const std::int64_t hi = std::min(lo + kBatchFrames, cfg.stop.max_frames);

    if (workers <= 1 || hi - lo == 1) {
      for (std::int64_t f = lo; f < hi; ++f) slots[f - lo] = run_frame(f);
    } else {
      std::atomic<std::int64_t> cursor{lo};
      std::atomic<bool> failed{false};
      std::exception_ptr first_error;
      std::mutex error_mutex;
      auto worker = [&] {
        try {
          for (;;) {
            const std::int64_t f = cursor.fetch_add(1);
            if (f >= hi || failed.load(std::memory_order_relaxed)) return;
            slots[f - lo] = run_frame(f);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
        }
      };
      std::vector<std::thread> pool;
      const int count = static_cast<int>(std::min<std::int64_t>(workers, hi - lo));
      pool.reserve(count);
      for (int w = 0; w < count; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      if (first_error) std::rethrow_exception(first_error);
    }

    // In-order scan; everything past the stopping frame is discarded, so a
    // batch never leaks later frames into the aggregates.
    for (std::int64_t f = lo; f < hi; ++f) {
      const FrameStats& st = slots[f - lo];
      ++frames;
      bit_errors += st.bit_errors;
      frame_errors += st.bit_errors > 0;
      iteration_sum += st.iterations;
      ++kind_counts[st.kind];
      if (cfg.stop.target_frame_errors > 0 && frame_errors >= cfg.stop.target_frame_errors) {
        done = true;
        break;
      }
    }
    if (frames >= cfg.stop.max_frames) done = true;
  }

  SimRecord rec;
  rec.snr_db = snr_db;
  rec.frames = frames;
  rec.bit_errors = bit_errors;
  rec.frame_errors = frame_errors;
  rec.ber = static_cast<double>(bit_errors) / (static_cast<double>(frames) * n);
  rec.fer = static_cast<double>(frame_errors) / static_cast<double>(frames);
  rec.mean_iterations = static_cast<double>(iteration_sum) / static_cast<double>(frames);
  rec.match = kind_counts[kMatch];
  rec.valid_mismatch = kind_counts[kValidMismatch];
  rec.invalid = kind_counts[kInvalid];
  return rec;
}

std::vector<SimRecord> run_points(const SimConfig& cfg, const ParityCheckMatrix& h,
                                  const std::vector<double>& snrs_db) {
  std::vector<SimRecord> out;
  out.reserve(snrs_db.size());
  for (double snr : snrs_db) out.push_back(run_point(cfg, h, snr));
  return out;
}

std::vector<SweepRow> sweep(const SimConfig& cfg, const ParityCheckMatrix& h,
                            const SweepGrid& grid, const std::vector<double>& snrs_db) {
  if (cfg.decoder != DecoderId::kMpXorSat)
    throw std::invalid_argument("sweep: hyperparameter sweeps apply to the mpxorsat decoder");
  const std::vector<double> taus = grid.tau.empty() ? std::vector<double>{cfg.mp.tau} : grid.tau;
  const std::vector<double> thetas =
      grid.theta.empty() ? std::vector<double>{cfg.mp.theta} : grid.theta;
  const std::vector<double> etas = grid.eta.empty() ? std::vector<double>{cfg.mp.eta} : grid.eta;

  std::vector<SweepRow> rows;
  rows.reserve(taus.size() * thetas.size() * etas.size() * snrs_db.size());
  for (double tau : taus) {
    for (double theta : thetas) {
      for (double eta : etas) {
        SimConfig point = cfg;
        point.mp.tau = tau;
        point.mp.theta = theta;
        point.mp.eta = eta;
        for (double snr : snrs_db) {
          SweepRow row;
          row.tau = point.mp.resolved(h).tau;
          row.theta = theta;
          row.eta = eta;
          row.record = run_point(point, h, snr);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

AblationResult ablation(const SimConfig& cfg, const ParityCheckMatrix& h, double snr_db) {
  SimConfig on = cfg;
  on.decoder = DecoderId::kMpXorSat;
  on.mp.normalization = true;
  SimConfig off = on;
  off.mp.normalization = false;
  AblationResult res;
  res.with_channel_term = run_point(on, h, snr_db);
  res.without_channel_term = run_point(off, h, snr_db);
  return res;
}

std::string csv_header() {
  return "decoder,code,snr_db,frames,bit_errors,frame_errors,ber,fer,mean_iterations,"
         "match,valid_mismatch,invalid,tau,theta,eta,i_max,seed";
}

std::string csv_row(const SimConfig& cfg, const ParityCheckMatrix& h, const SimRecord& rec) {
  double tau = 0.0, theta = 0.0, eta = 0.0;
  int i_max = 0;
  switch (cfg.decoder) {
    case DecoderId::kMpXorSat: {
      const MpHyperParams p = cfg.mp.resolved(h);
      tau = p.tau;
      theta = p.theta;
      eta = p.eta;
      i_max = p.i_max;
      break;
    }
    case DecoderId::kSpa:
      i_max = cfg.spa.i_max;
      break;
    case DecoderId::kGdbf:
      theta = cfg.gdbf.theta;
      i_max = cfg.gdbf.i_max;
      break;
  }

  std::string row;
  row += decoder_label(cfg.decoder);
  row += ',';
  row += cfg.code_label;
  row += ',' + fmt_g(rec.snr_db);
  row += ',' + std::to_string(rec.frames);
  row += ',' + std::to_string(rec.bit_errors);
  row += ',' + std::to_string(rec.frame_errors);
  row += ',' + fmt_g(rec.ber);
  row += ',' + fmt_g(rec.fer);
  row += ',' + fmt_g(rec.mean_iterations);
  row += ',' + std::to_string(rec.match);
  row += ',' + std::to_string(rec.valid_mismatch);
  row += ',' + std::to_string(rec.invalid);
  row += ',' + fmt_g(tau);
  row += ',' + fmt_g(theta);
  row += ',' + fmt_g(eta);
  row += ',' + std::to_string(i_max);
  row += ',' + std::to_string(cfg.seed);
  return row;
}

}  // namespace mpldpc
