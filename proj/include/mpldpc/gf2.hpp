#pragma once

#include <vector>

#include "mpldpc/parity_check_matrix.hpp"

namespace mpldpc {

// Basis of the null space of H over GF(2). Every row is a codeword; messages
// are encoded by XORing the rows selected by the message bits.
struct GeneratorMatrix {
  int k = 0;  // dimension (number of basis rows)
  int n = 0;  // block length
  std::vector<BinaryWord> rows;
};

// Rank of H over GF(2), computed by dense elimination.
int gf2_rank(const ParityCheckMatrix& h);

// Null-space basis via Gauss-Jordan elimination. Works for rank-deficient H
// (k = n - rank). The basis rows are ordered by their free column index, so
// the result is deterministic for a given matrix.
GeneratorMatrix gaussian_generator(const ParityCheckMatrix& h);

// XOR of the generator rows selected by message (length k).
BinaryWord encode(const GeneratorMatrix& g, const BinaryWord& message);

}  // namespace mpldpc
