#include "mpldpc/parity_check_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpldpc {

BinaryWord xor_words(const BinaryWord& a, const BinaryWord& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("xor_words: length mismatch");
  BinaryWord out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

std::size_t hamming_distance(const BinaryWord& a, const BinaryWord& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

std::string to_bit_string(const BinaryWord& u) {
  std::string s;
  s.reserve(u.size());
  for (auto b : u) s.push_back(b ? '1' : '0');
  return s;
}

ParityCheckMatrix::ParityCheckMatrix(int clause_count, int variable_count,
                                     std::vector<std::vector<int>> rows)
    : m_(clause_count), n_(variable_count), rows_(std::move(rows)) {
  if (m_ < 1 || n_ < 1)
    throw std::invalid_argument("ParityCheckMatrix: dimensions must be positive");
  if (static_cast<int>(rows_.size()) != m_)
    throw std::invalid_argument("ParityCheckMatrix: row list count does not match clause count");

  cols_.assign(n_, {});
  for (int i = 0; i < m_; ++i) {
    auto& row = rows_[i];
    if (row.empty())
      throw std::invalid_argument("ParityCheckMatrix: row " + std::to_string(i) + " is empty");
    std::sort(row.begin(), row.end());
    for (std::size_t a = 0; a < row.size(); ++a) {
      int j = row[a];
      if (j < 0 || j >= n_)
        throw std::invalid_argument("ParityCheckMatrix: row " + std::to_string(i) +
                                    " references variable " + std::to_string(j) +
                                    " outside [0, " + std::to_string(n_) + ")");
      if (a > 0 && row[a - 1] == j)
        throw std::invalid_argument("ParityCheckMatrix: row " + std::to_string(i) +
                                    " lists variable " + std::to_string(j) + " twice");
      cols_[j].push_back(i);  // rows scanned in order, so columns come out sorted
    }
  }
}

int ParityCheckMatrix::max_row_degree() const {
  std::size_t d = 0;
  for (const auto& r : rows_) d = std::max(d, r.size());
  return static_cast<int>(d);
}

int ParityCheckMatrix::max_col_degree() const {
  std::size_t d = 0;
  for (const auto& c : cols_) d = std::max(d, c.size());
  return static_cast<int>(d);
}

std::size_t ParityCheckMatrix::edge_count() const {
  std::size_t e = 0;
  for (const auto& r : rows_) e += r.size();
  return e;
}

BinaryWord syndrome(const ParityCheckMatrix& h, const BinaryWord& u) {
  if (static_cast<int>(u.size()) != h.variable_count())
    throw std::invalid_argument("syndrome: word length does not match variable count");
  BinaryWord s(h.clause_count());
  for (int i = 0; i < h.clause_count(); ++i) {
    std::uint8_t parity = 0;
    for (int j : h.row_support(i)) parity ^= (u[j] & 1u);
    s[i] = parity;
  }
  return s;
}

bool is_codeword(const ParityCheckMatrix& h, const BinaryWord& u) {
  if (static_cast<int>(u.size()) != h.variable_count())
    throw std::invalid_argument("is_codeword: word length does not match variable count");
  for (int i = 0; i < h.clause_count(); ++i) {
    std::uint8_t parity = 0;
    for (int j : h.row_support(i)) parity ^= (u[j] & 1u);
    if (parity) return false;
  }
  return true;
}

}  // namespace mpldpc
