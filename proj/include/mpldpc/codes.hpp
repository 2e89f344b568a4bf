#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpldpc/parity_check_matrix.hpp"

namespace mpldpc {

// Three-variable code with clauses u1^u2 and u2^u3. The two codewords are
// 000 and 111, so decoding amounts to a majority vote.
ParityCheckMatrix majority_code();

// (7,4) Hamming code, columns j = 1..7 holding the binary expansion of j.
ParityCheckMatrix hamming74();

// (32,8) regular code: 24 clauses, every variable in exactly 3 of them,
// every clause over exactly 4 variables. Built from a pinned seed that was
// screened for full row rank and clean waterfall behavior.
ParityCheckMatrix reg32();

// Regular random matrix via socket permutation: n*col_degree variable
// sockets matched to m*row_degree check sockets (row_degree must come out
// integral). Permutations that would create a duplicate edge are redrawn;
// gives up after a bounded number of attempts.
ParityCheckMatrix random_regular_matrix(int m, int n, int col_degree, std::uint64_t seed);

const std::vector<std::string>& builtin_code_names();

// Builtin name, or a path to an alist file.
ParityCheckMatrix load_code(const std::string& name_or_path);

}  // namespace mpldpc
