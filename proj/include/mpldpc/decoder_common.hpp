#pragma once

#include <vector>

#include "mpldpc/parity_check_matrix.hpp"

namespace mpldpc {

enum class FlipMode {
  kMulti,   // flip every bit past the threshold in one iteration
  kSingle,  // flip only the single worst bit (ties to the lowest index)
};

struct DecodeOutcome {
  BinaryWord decision;
  int iterations_used = 0;  // update rounds actually performed
  bool converged = false;   // true iff the decision satisfies every clause
  // Satisfied-clause count at iteration 0, after each update, ..., final
  // state. Only filled when the caller asks for a trajectory.
  std::vector<int> satisfied_trajectory;
};

}  // namespace mpldpc
