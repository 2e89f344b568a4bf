#include <climits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mpldpc/alist.hpp"
#include "mpldpc/codes.hpp"
#include "mpldpc/gf2.hpp"
#include "mpldpc/sim.hpp"

namespace {

using namespace mpldpc;

std::vector<double> read_reals(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    in = &file;
  }
  std::vector<double> vals;
  double v;
  while (*in >> v) vals.push_back(v);
  if (!in->eof()) {
    std::string token;
    in->clear();
    *in >> token;
    throw std::invalid_argument("input holds a non-numeric token: '" + token + "'");
  }
  return vals;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size())
      throw std::invalid_argument("bad number '" + tok + "' in list '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void print_summary(const SimConfig& cfg, const std::vector<SimRecord>& records) {
  std::printf("# decoder=%s code=%s seed=%llu\n", decoder_label(cfg.decoder).c_str(),
              cfg.code_label.c_str(), static_cast<unsigned long long>(cfg.seed));
  std::printf("%-8s %-10s %-12s %-12s %-10s %-8s %-8s %-8s\n", "snr_db", "frames", "ber", "fer",
              "mean_it", "match", "mism", "inval");
  for (const auto& r : records)
    std::printf("%-8g %-10lld %-12.4g %-12.4g %-10.2f %-8lld %-8lld %-8lld\n", r.snr_db,
                static_cast<long long>(r.frames), r.ber, r.fer, r.mean_iterations,
                static_cast<long long>(r.match), static_cast<long long>(r.valid_mismatch),
                static_cast<long long>(r.invalid));
}

// CSV goes to stdout unless --out was given; returns true when a file was
// written (callers then print the human summary instead).
bool emit_csv(const std::string& out_path, const std::string& csv) {
  if (out_path.empty()) {
    std::fputs(csv.c_str(), stdout);
    return false;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + out_path);
  out << csv;
  if (!out) throw std::runtime_error("write failed for output file: " + out_path);
  return true;
}

struct CliState {
  std::string code;
  std::vector<std::string> decoders = {"mpxorsat"};
  std::string input = "-";
  std::string out_path;
  std::string flip = "multi";
  std::vector<double> snrs;
  std::int64_t stop_errors = 100;
  std::int64_t max_frames = 10'000'000;
  std::int64_t fixed_frames = 2000;
  std::uint64_t seed = 1;
  int workers = 0;
  bool llr_input = false;
  bool trace = false;
  bool random_codewords = false;
  MpHyperParams mp;
  SpaParams spa;
  GdbfParams gdbf;
  double sigma = 1.0;
  std::vector<double> tau_grid, theta_grid, eta_grid;
  std::vector<std::string> grid_specs;
  std::string alist_path;
};

void add_mp_options(CLI::App* cmd, CliState& st) {
  cmd->add_option("--tau", st.mp.tau, "margin budget; 0 means the clause count M");
  cmd->add_option("--theta", st.mp.theta, "flip threshold on q")->capture_default_str();
  cmd->add_option("--eta", st.mp.eta, "gradient step size")->capture_default_str();
  cmd->add_option("--qmin", st.mp.q_min, "floor score for an absent clause set")
      ->capture_default_str();
  cmd->add_option("--flip", st.flip, "flip mode: multi or single")->capture_default_str();
  cmd->add_flag("--no-clamp-q", [&st](std::int64_t) { st.mp.clamp_q = false; },
                "allow q to grow above 0");
  cmd->add_flag("--reset-q-on-flip", st.mp.reset_q_on_flip, "flipped bits restart at q = 0");
  cmd->add_flag("--no-normalization", [&st](std::int64_t) { st.mp.normalization = false; },
                "drop the channel-agreement term from the gradient");
}

void add_decoder_options(CLI::App* cmd, CliState& st, bool multi_decoder) {
  cmd->add_option("--decoder", st.decoders,
                  multi_decoder ? "mpxorsat, spa or gdbf; comma list runs each in turn"
                                : "mpxorsat, spa or gdbf")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--imax", st.mp.i_max, "iteration budget (all decoders)")
      ->capture_default_str();
  cmd->add_option("--llr-clip", st.spa.llr_clip, "message clamp for spa")->capture_default_str();
  cmd->add_option("--gdbf-theta", st.gdbf.theta, "energy threshold for gdbf multi mode")
      ->capture_default_str();
  add_mp_options(cmd, st);
}

FlipMode parse_flip(const std::string& s) {
  if (s == "multi") return FlipMode::kMulti;
  if (s == "single") return FlipMode::kSingle;
  throw std::invalid_argument("unknown flip mode '" + s + "' (expected multi or single)");
}

SimConfig build_sim_config(const CliState& st, const std::string& decoder) {
  SimConfig cfg;
  cfg.code_label = st.code;
  cfg.decoder = parse_decoder(decoder);
  cfg.mp = st.mp;
  cfg.mp.flip_mode = parse_flip(st.flip);
  cfg.spa = st.spa;
  cfg.spa.i_max = st.mp.i_max;
  cfg.gdbf = st.gdbf;
  cfg.gdbf.i_max = st.mp.i_max;
  cfg.gdbf.flip_mode = cfg.mp.flip_mode;
  cfg.stop.target_frame_errors = st.stop_errors;
  cfg.stop.max_frames = st.max_frames;
  cfg.seed = st.seed;
  cfg.transmit = st.random_codewords ? TransmitMode::kRandomCodeword : TransmitMode::kAllZero;
  cfg.workers = st.workers;
  cfg.llr_scale_input = st.llr_input;
  if (const char* env = std::getenv("MP_LDPC_THREADS")) {
    // environment wins over --workers so batch scripts can repin a run
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw std::invalid_argument("MP_LDPC_THREADS must be a positive integer");
    cfg.workers = static_cast<int>(v);
  }
  return cfg;
}

const std::string& single_decoder(const CliState& st, const char* who) {
  if (st.decoders.size() != 1)
    throw std::invalid_argument(std::string(who) + " takes exactly one --decoder");
  return st.decoders.front();
}

void require_mp_decoder(const CliState& st, const char* who) {
  if (st.decoders.size() != 1 || st.decoders.front() != "mpxorsat")
    throw std::invalid_argument(std::string(who) + " only runs the mpxorsat decoder");
}

int run_decode(const CliState& st) {
  const ParityCheckMatrix h = load_code(st.code);
  const std::vector<double> r = read_reals(st.input);
  if (static_cast<int>(r.size()) != h.variable_count())
    throw std::invalid_argument("input has " + std::to_string(r.size()) + " values but the code has " +
                                std::to_string(h.variable_count()) + " variables");

  DecodeOutcome res;
  const DecoderId id = parse_decoder(single_decoder(st, "decode"));
  if (id == DecoderId::kMpXorSat) {
    MpHyperParams p = st.mp;
    p.flip_mode = parse_flip(st.flip);
    p.record_trajectory = st.trace;
    res = decode(r, h, p);
  } else if (id == DecoderId::kSpa) {
    SpaParams p = st.spa;
    p.i_max = st.mp.i_max;
    res = spa_decode(r, h, st.sigma, p);
  } else {
    GdbfParams p = st.gdbf;
    p.i_max = st.mp.i_max;
    p.flip_mode = parse_flip(st.flip);
    res = gdbf_decode(r, h, p);
  }

  std::printf("u=%s converged=%d iters=%d\n", to_bit_string(res.decision).c_str(),
              res.converged ? 1 : 0, res.iterations_used);
  if (st.trace && !res.satisfied_trajectory.empty()) {
    std::printf("sat=");
    for (std::size_t i = 0; i < res.satisfied_trajectory.size(); ++i)
      std::printf(i ? ",%d" : "%d", res.satisfied_trajectory[i]);
    std::printf("\n");
  }
  return 0;
}

int run_simulate(const CliState& st) {
  const ParityCheckMatrix h = load_code(st.code);
  if (st.snrs.empty()) throw std::invalid_argument("simulate needs at least one --snr value");
  if (st.decoders.empty()) throw std::invalid_argument("simulate needs a --decoder");

  std::string csv = csv_header() + "\n";
  std::vector<std::pair<SimConfig, std::vector<SimRecord>>> blocks;
  for (const std::string& label : st.decoders) {
    SimConfig cfg = build_sim_config(st, label);
    std::vector<SimRecord> records = run_points(cfg, h, st.snrs);
    for (const auto& rec : records) csv += csv_row(cfg, h, rec) + "\n";
    blocks.emplace_back(std::move(cfg), std::move(records));
  }
  if (emit_csv(st.out_path, csv))
    for (const auto& [cfg, records] : blocks) print_summary(cfg, records);
  return 0;
}

int run_sweep(const CliState& st) {
  const ParityCheckMatrix h = load_code(st.code);
  require_mp_decoder(st, "sweep");
  SimConfig cfg = build_sim_config(st, "mpxorsat");
  if (st.snrs.empty()) throw std::invalid_argument("sweep needs at least one --snr value");

  SweepGrid grid{st.tau_grid, st.theta_grid, st.eta_grid};
  for (const std::string& spec : st.grid_specs) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--grid expects axis=v1,v2,... but got '" + spec + "'");
    const std::string axis = spec.substr(0, eq);
    const std::vector<double> values = parse_double_list(spec.substr(eq + 1));
    if (axis == "tau")
      grid.tau = values;
    else if (axis == "theta")
      grid.theta = values;
    else if (axis == "eta")
      grid.eta = values;
    else
      throw std::invalid_argument("unknown sweep axis '" + axis + "' (tau, theta or eta)");
  }

  const std::vector<SweepRow> rows = sweep(cfg, h, grid, st.snrs);
  std::string csv = csv_header() + "\n";
  std::vector<SimRecord> records;
  for (const auto& row : rows) {
    SimConfig point = cfg;
    point.mp.tau = row.tau;
    point.mp.theta = row.theta;
    point.mp.eta = row.eta;
    csv += csv_row(point, h, row.record) + "\n";
    records.push_back(row.record);
  }
  if (emit_csv(st.out_path, csv)) print_summary(cfg, records);
  return 0;
}

int run_ablate(const CliState& st) {
  const ParityCheckMatrix h = load_code(st.code);
  require_mp_decoder(st, "ablate");
  SimConfig cfg = build_sim_config(st, "mpxorsat");
  // fixed frame budget so the two arms see exactly the same noise
  cfg.stop.target_frame_errors = 0;
  cfg.stop.max_frames = st.fixed_frames;
  if (st.snrs.empty()) throw std::invalid_argument("ablate needs at least one --snr value");

  SimConfig on = cfg;
  on.mp.normalization = true;
  SimConfig off = cfg;
  off.mp.normalization = false;

  std::string csv = csv_header() + "\n";
  std::vector<AblationResult> results;
  for (double snr : st.snrs) {
    const AblationResult res = ablation(cfg, h, snr);
    csv += csv_row(on, h, res.with_channel_term) + "\n";
    csv += csv_row(off, h, res.without_channel_term) + "\n";
    results.push_back(res);
  }
  emit_csv(st.out_path, csv);
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::printf("# snr=%g channel term on:  ber=%.6g fer=%.6g\n", st.snrs[i],
                results[i].with_channel_term.ber, results[i].with_channel_term.fer);
    std::printf("# snr=%g channel term off: ber=%.6g fer=%.6g\n", st.snrs[i],
                results[i].without_channel_term.ber, results[i].without_channel_term.fer);
  }
  return 0;
}

std::string degree_profile(const std::vector<std::vector<int>>& lists) {
  if (lists.empty()) return "0";
  int lo = INT_MAX, hi = 0;
  for (const auto& l : lists) {
    lo = std::min(lo, static_cast<int>(l.size()));
    hi = std::max(hi, static_cast<int>(l.size()));
  }
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

int run_codes(const CliState& st) {
  if (!st.alist_path.empty()) {
    const ParityCheckMatrix h = load_alist_file(st.alist_path);
    std::printf("N=%d M=%d rank=%d rowdeg=%s coldeg=%s\n", h.variable_count(), h.clause_count(),
                gf2_rank(h), degree_profile(h.rows()).c_str(), degree_profile(h.cols()).c_str());
    return 0;
  }
  for (const auto& name : builtin_code_names()) {
    const ParityCheckMatrix h = load_code(name);
    const int rank = gf2_rank(h);
    std::printf("%-10s N=%-4d M=%-4d k=%-4d rank=%-4d rowdeg=%s coldeg=%s\n", name.c_str(),
                h.variable_count(), h.clause_count(), h.variable_count() - rank, rank,
                degree_profile(h.rows()).c_str(), degree_profile(h.cols()).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LDPC playground: margin-propagation XOR-SAT decoding, "
               "sum-product and bit-flipping references, AWGN Monte-Carlo harness"};
  app.require_subcommand(1);
  CliState st;

  CLI::App* decode_cmd = app.add_subcommand("decode", "decode one received vector");
  decode_cmd->add_option("--code", st.code, "builtin code name or alist path")->required();
  decode_cmd->add_option("--input", st.input, "file of whitespace-separated reals, - for stdin")
      ->capture_default_str();
  decode_cmd->add_option("--sigma", st.sigma, "noise level used for spa's internal LLRs")
      ->capture_default_str();
  decode_cmd->add_flag("--trace", st.trace, "also print the satisfied-clause trajectory");
  add_decoder_options(decode_cmd, st, false);

  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo BER/FER over an SNR list");
  sim_cmd->add_option("--code", st.code, "builtin code name or alist path")->required();
  sim_cmd->add_option("--snr", st.snrs, "Eb/N0 points in dB, comma separated")
      ->required()
      ->delimiter(',');
  sim_cmd->add_option("--stop-errors", st.stop_errors, "frame errors to stop at; 0 disables")
      ->capture_default_str();
  sim_cmd->add_option("--max-frames", st.max_frames, "hard frame cap per point")
      ->capture_default_str();
  sim_cmd->add_option("--seed", st.seed, "base seed for the frame streams")->capture_default_str();
  sim_cmd->add_option("--workers", st.workers, "worker threads; 0 = all cores")
      ->capture_default_str();
  sim_cmd->add_option("--out", st.out_path, "write CSV here and print a summary instead");
  sim_cmd->add_flag("--random-codewords", st.random_codewords,
                    "encode random messages instead of the zero codeword");
  sim_cmd->add_flag("--llr-input", st.llr_input, "feed 2r/sigma^2 to mpxorsat/gdbf");
  add_decoder_options(sim_cmd, st, true);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid sweep of mpxorsat hyperparameters");
  sweep_cmd->add_option("--code", st.code, "builtin code name or alist path")->required();
  sweep_cmd->add_option("--snr", st.snrs, "Eb/N0 points in dB")->required()->delimiter(',');
  sweep_cmd->add_option("--grid", st.grid_specs, "axis=v1,v2,... for tau, theta or eta")
      ->take_all();
  sweep_cmd->add_option("--tau-grid", st.tau_grid, "tau values")->delimiter(',');
  sweep_cmd->add_option("--theta-grid", st.theta_grid, "theta values")->delimiter(',');
  sweep_cmd->add_option("--eta-grid", st.eta_grid, "eta values")->delimiter(',');
  sweep_cmd->add_option("--stop-errors", st.stop_errors)->capture_default_str();
  sweep_cmd->add_option("--max-frames", st.max_frames)->capture_default_str();
  sweep_cmd->add_option("--seed", st.seed)->capture_default_str();
  sweep_cmd->add_option("--workers", st.workers)->capture_default_str();
  sweep_cmd->add_option("--out", st.out_path, "write CSV here and print a summary instead");
  sweep_cmd->add_flag("--random-codewords", st.random_codewords);
  sweep_cmd->add_flag("--llr-input", st.llr_input);
  add_decoder_options(sweep_cmd, st, false);

  CLI::App* ablate_cmd =
      app.add_subcommand("ablate", "mpxorsat with and without the channel-agreement term");
  ablate_cmd->add_option("--code", st.code, "builtin code name or alist path")->required();
  ablate_cmd->add_option("--snr", st.snrs, "Eb/N0 points in dB")->required()->delimiter(',');
  ablate_cmd->add_option("--frames", st.fixed_frames, "fixed frame budget for both arms")
      ->capture_default_str();
  ablate_cmd->add_option("--seed", st.seed)->capture_default_str();
  ablate_cmd->add_option("--workers", st.workers)->capture_default_str();
  ablate_cmd->add_option("--out", st.out_path, "write CSV here");
  ablate_cmd->add_flag("--random-codewords", st.random_codewords);
  ablate_cmd->add_flag("--llr-input", st.llr_input);
  add_decoder_options(ablate_cmd, st, false);

  CLI::App* codes_cmd = app.add_subcommand("codes", "list builtin codes or summarize an alist");
  codes_cmd->add_option("--alist", st.alist_path, "describe this alist file instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*decode_cmd) return run_decode(st);
    if (*sim_cmd) return run_simulate(st);
    if (*sweep_cmd) return run_sweep(st);
    if (*ablate_cmd) return run_ablate(st);
    if (*codes_cmd) return run_codes(st);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
