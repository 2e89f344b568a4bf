#pragma once

#include <stdexcept>
#include <string>

#include "mpldpc/parity_check_matrix.hpp"

namespace mpldpc {

// Parse failure in alist text. line() is the 1-based line the problem was
// detected on (0 when the file ended before the line existed at all).
class AlistParseError : public std::runtime_error {
 public:
  AlistParseError(int line, const std::string& message)
      : std::runtime_error("alist line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Alist layout:
//   line 1: N M
//   line 2: max_col_degree max_row_degree
//   line 3: N column degrees
//   line 4: M row degrees
//   N lines of 1-based row indices per column (zero entries are padding)
//   M lines of 1-based column indices per row
ParityCheckMatrix parse_alist(const std::string& text);
ParityCheckMatrix load_alist_file(const std::string& path);

// Emits the layout above without zero padding. parse_alist(serialize_alist(h))
// reproduces h exactly.
std::string serialize_alist(const ParityCheckMatrix& h);
void save_alist_file(const ParityCheckMatrix& h, const std::string& path);

}  // namespace mpldpc
