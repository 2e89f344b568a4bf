#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mpldpc {

// Bits stored one per byte, values restricted to 0/1.
using BinaryWord = std::vector<std::uint8_t>;

BinaryWord xor_words(const BinaryWord& a, const BinaryWord& b);
std::size_t hamming_distance(const BinaryWord& a, const BinaryWord& b);
std::string to_bit_string(const BinaryWord& u);

// Sparse M x N binary parity-check matrix. Row i lists the variables of
// XOR clause i; the column lists are kept consistent with the rows so both
// directions of the bipartite graph can be walked without rebuilding.
class ParityCheckMatrix {
 public:
  // rows[i] holds the 0-based variable indices of clause i. Indices may be
  // given in any order; they are sorted internally. Empty rows, out-of-range
  // or duplicate indices are rejected.
  ParityCheckMatrix(int clause_count, int variable_count,
                    std::vector<std::vector<int>> rows);

  int clause_count() const { return m_; }
  int variable_count() const { return n_; }

  const std::vector<int>& row_support(int i) const { return rows_[i]; }
  const std::vector<int>& col_support(int j) const { return cols_[j]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<std::vector<int>>& cols() const { return cols_; }

  int max_row_degree() const;
  int max_col_degree() const;
  std::size_t edge_count() const;

  bool operator==(const ParityCheckMatrix& other) const {
    return m_ == other.m_ && n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> cols_;
};

// Parity of each clause over GF(2): syndrome(h, u)[i] = XOR of u_j over
// row i. u must have length variable_count().
BinaryWord syndrome(const ParityCheckMatrix& h, const BinaryWord& u);
bool is_codeword(const ParityCheckMatrix& h, const BinaryWord& u);

}  // namespace mpldpc
