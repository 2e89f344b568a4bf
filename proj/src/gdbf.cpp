#include "mpldpc/gdbf.hpp"

#include <cmath>
#include <stdexcept>

namespace mpldpc {

namespace {

// Clause signs from the hard decisions: +1 when the clause parity is even
// (satisfied), -1 otherwise. Returns the number of violated clauses.
int clause_signs(const ParityCheckMatrix& h, const std::vector<std::int8_t>& x,
                 std::vector<std::int8_t>& s) {
  int unsat = 0;
  for (int i = 0; i < h.clause_count(); ++i) {
    int ones = 0;
    for (int j : h.row_support(i)) ones += x[j] > 0;
    const bool satisfied = (ones % 2) == 0;
    s[i] = satisfied ? 1 : -1;
    unsat += !satisfied;
  }
  return unsat;
}

}  // namespace

std::vector<double> gdbf_energies(std::span<const double> r, const ParityCheckMatrix& h,
                                  std::span<const std::int8_t> x) {
  if (static_cast<int>(r.size()) != h.variable_count() || r.size() != x.size())
    throw std::invalid_argument("gdbf_energies: size mismatch");
  std::vector<std::int8_t> xv(x.begin(), x.end());
  std::vector<std::int8_t> s(h.clause_count());
  clause_signs(h, xv, s);
  std::vector<double> e(h.variable_count());
  for (int j = 0; j < h.variable_count(); ++j) {
    double sum = x[j] * r[j];
    for (int i : h.col_support(j)) sum += s[i];
    e[j] = sum;
  }
  return e;
}

DecodeOutcome gdbf_decode(std::span<const double> r, const ParityCheckMatrix& h,
                          const GdbfParams& params) {
  if (static_cast<int>(r.size()) != h.variable_count())
    throw std::invalid_argument("gdbf_decode: input length does not match variable count");
  if (params.i_max < 1) throw std::invalid_argument("gdbf_decode: i_max must be at least 1");
  for (double v : r)
    if (!std::isfinite(v)) throw std::invalid_argument("gdbf_decode: inputs must be finite");

  const int n = h.variable_count();
  std::vector<std::int8_t> x(n);
  for (int j = 0; j < n; ++j) x[j] = r[j] < 0.0 ? -1 : +1;  // sign(0) = +1

  std::vector<std::int8_t> s(h.clause_count());
  std::vector<double> energy(n);
  DecodeOutcome out;
  int iteration = 0;

  for (;;) {
    const int unsat = clause_signs(h, x, s);
    if (unsat == 0) {
      out.converged = true;
      break;
    }
    if (iteration >= params.i_max) break;

    for (int j = 0; j < n; ++j) {
      double sum = x[j] * r[j];
      for (int i : h.col_support(j)) sum += s[i];
      energy[j] = sum;
    }

    if (params.flip_mode == FlipMode::kSingle) {
      int worst = 0;
      for (int j = 1; j < n; ++j)
        if (energy[j] < energy[worst]) worst = j;  // ties keep the lowest index
      x[worst] = -x[worst];
    } else {
      int flips = 0;
      for (int j = 0; j < n; ++j) {
        if (energy[j] < params.theta) {
          x[j] = -x[j];
          ++flips;
        }
      }
      if (flips == 0) break;  // stalled: no threshold crossing, state is frozen
    }
    ++iteration;
  }

  out.iterations_used = iteration;
  out.decision.resize(n);
  for (int j = 0; j < n; ++j) out.decision[j] = x[j] > 0 ? 1 : 0;
  return out;
}

}  // namespace mpldpc
