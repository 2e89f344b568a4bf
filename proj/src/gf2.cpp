#include "mpldpc/gf2.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace mpldpc {

namespace {

// Row-major dense bit matrix, 64 columns per word. Only what elimination
// needs: bit access and row XOR.
class DenseBits {
 public:
  DenseBits(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(std::size_t(rows) * words_) {}

  void set(int r, int c) { bits_[std::size_t(r) * words_ + c / 64] |= 1ull << (c % 64); }
  bool get(int r, int c) const {
    return (bits_[std::size_t(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void xor_row(int dst, int src) {
    auto* d = &bits_[std::size_t(dst) * words_];
    const auto* s = &bits_[std::size_t(src) * words_];
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int w = 0; w < words_; ++w)
      std::swap(bits_[std::size_t(a) * words_ + w], bits_[std::size_t(b) * words_ + w]);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

DenseBits densify(const ParityCheckMatrix& h) {
  DenseBits d(h.clause_count(), h.variable_count());
  for (int i = 0; i < h.clause_count(); ++i)
    for (int j : h.row_support(i)) d.set(i, j);
  return d;
}

// Reduced row echelon form. Pivot for each column is the first remaining row
// holding a one, scanning columns left to right. Returns pivot columns in
// order; the matrix is modified in place.
std::vector<int> rref(DenseBits& a) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.get(i, c)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    a.swap_rows(r, pivot);
    for (int i = 0; i < a.rows(); ++i)
      if (i != r && a.get(i, c)) a.xor_row(i, r);
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int gf2_rank(const ParityCheckMatrix& h) {
  DenseBits a = densify(h);
  return static_cast<int>(rref(a).size());
}

GeneratorMatrix gaussian_generator(const ParityCheckMatrix& h) {
  DenseBits a = densify(h);
  const std::vector<int> pivot_cols = rref(a);
  const int n = h.variable_count();
  const int rank = static_cast<int>(pivot_cols.size());

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  GeneratorMatrix g;
  g.n = n;
  g.k = n - rank;
  g.rows.reserve(g.k);
  // One basis codeword per free column: put a 1 there, then read the pivot
  // coordinates off the reduced rows. Row ops preserve the null space, so
  // these satisfy the original H as well.
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BinaryWord w(n, 0);
    w[f] = 1;
    for (int p = 0; p < rank; ++p)
      if (a.get(p, f)) w[pivot_cols[p]] = 1;
    g.rows.push_back(std::move(w));
  }
  return g;
}

BinaryWord encode(const GeneratorMatrix& g, const BinaryWord& message) {
  if (static_cast<int>(message.size()) != g.k)
    throw std::invalid_argument("encode: message length does not match generator dimension");
  BinaryWord c(g.n, 0);
  for (int b = 0; b < g.k; ++b) {
    if (!message[b]) continue;
    for (int j = 0; j < g.n; ++j) c[j] ^= g.rows[b][j];
  }
  return c;
}

}  // namespace mpldpc
