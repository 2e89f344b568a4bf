#include "mpldpc/alist.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace mpldpc {

namespace {

// Hands out the file line by line, already split into integers, and keeps
// track of the 1-based line number for error reporting.
class LineScanner {
 public:
  explicit LineScanner(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(std::move(line));
    }
  }

  // Next line parsed as a list of ints. `what` names the section so a
  // truncated file produces a usable message.
  std::vector<int> next_int_line(const std::string& what) {
    while (pos_ < lines_.size()) {
      const std::string& raw = lines_[pos_];
      ++pos_;
      if (raw.find_first_not_of(" \t") == std::string::npos) continue;  // skip blanks
      std::istringstream ls(raw);
      std::vector<int> vals;
      long long v;
      while (ls >> v) {
        if (v < 0 || v > 1'000'000'000)
          throw AlistParseError(line_number(), "value " + std::to_string(v) +
                                                   " out of range in " + what);
        vals.push_back(static_cast<int>(v));
      }
      if (!ls.eof()) {
        std::string junk;
        ls.clear();
        ls >> junk;
        throw AlistParseError(line_number(), "unexpected token '" + junk + "' in " + what);
      }
      return vals;
    }
    throw AlistParseError(static_cast<int>(lines_.size()),
                          "file ends before " + what);
  }

  void expect_end() {
    while (pos_ < lines_.size()) {
      if (lines_[pos_].find_first_not_of(" \t") != std::string::npos)
        throw AlistParseError(static_cast<int>(pos_) + 1, "trailing content after row lists");
      ++pos_;
    }
  }

  int line_number() const { return static_cast<int>(pos_); }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

// Strip zero padding, check the count against the declared degree and the
// range of every index. Returns 0-based indices.
std::vector<int> read_adjacency(LineScanner& scan, const std::string& what, int degree,
                                int index_limit) {
  std::vector<int> vals = scan.next_int_line(what);
  std::vector<int> out;
  for (int v : vals) {
    if (v == 0) continue;  // padding
    if (v > index_limit)
      throw AlistParseError(scan.line_number(), what + " lists index " + std::to_string(v) +
                                                    " beyond " + std::to_string(index_limit));
    out.push_back(v - 1);
  }
  if (static_cast<int>(out.size()) != degree)
    throw AlistParseError(scan.line_number(),
                          what + " has " + std::to_string(out.size()) +
                              " entries but the degree list says " + std::to_string(degree));
  std::sort(out.begin(), out.end());
  for (std::size_t a = 1; a < out.size(); ++a)
    if (out[a] == out[a - 1])
      throw AlistParseError(scan.line_number(),
                            what + " lists index " + std::to_string(out[a] + 1) + " twice");
  return out;
}

}  // namespace

ParityCheckMatrix parse_alist(const std::string& text) {
  LineScanner scan(text);

  std::vector<int> dims = scan.next_int_line("the size line (N M)");
  if (dims.size() != 2)
    throw AlistParseError(scan.line_number(), "size line must hold exactly two values (N M)");
  const int n = dims[0];
  const int m = dims[1];
  if (n < 1 || m < 1)
    throw AlistParseError(scan.line_number(), "N and M must be positive");

  std::vector<int> maxdeg = scan.next_int_line("the max-degree line");
  if (maxdeg.size() != 2)
    throw AlistParseError(scan.line_number(), "max-degree line must hold exactly two values");
  const int max_col = maxdeg[0];
  const int max_row = maxdeg[1];

  std::vector<int> col_deg = scan.next_int_line("the column degree list");
  if (static_cast<int>(col_deg.size()) != n)
    throw AlistParseError(scan.line_number(),
                          "column degree list has " + std::to_string(col_deg.size()) +
                              " entries, expected " + std::to_string(n));
  std::vector<int> row_deg = scan.next_int_line("the row degree list");
  if (static_cast<int>(row_deg.size()) != m)
    throw AlistParseError(scan.line_number(),
                          "row degree list has " + std::to_string(row_deg.size()) +
                              " entries, expected " + std::to_string(m));

  int seen_max_col = 0, seen_max_row = 0;
  for (int d : col_deg) {
    if (d < 0 || d > m)
      throw AlistParseError(3, "column degree " + std::to_string(d) + " out of range");
    seen_max_col = std::max(seen_max_col, d);
  }
  for (int d : row_deg) {
    if (d < 1 || d > n)
      throw AlistParseError(4, "row degree " + std::to_string(d) + " out of range");
    seen_max_row = std::max(seen_max_row, d);
  }
  if (seen_max_col != max_col)
    throw AlistParseError(2, "declared max column degree " + std::to_string(max_col) +
                                 " but the degree list peaks at " + std::to_string(seen_max_col));
  if (seen_max_row != max_row)
    throw AlistParseError(2, "declared max row degree " + std::to_string(max_row) +
                                 " but the degree list peaks at " + std::to_string(seen_max_row));

  std::vector<std::vector<int>> cols(n);
  for (int j = 0; j < n; ++j)
    cols[j] = read_adjacency(scan, "column " + std::to_string(j + 1), col_deg[j], m);
  std::vector<std::vector<int>> rows(m);
  for (int i = 0; i < m; ++i)
    rows[i] = read_adjacency(scan, "row " + std::to_string(i + 1), row_deg[i], n);
  const int last_line = scan.line_number();
  scan.expect_end();

  // The two adjacency sections describe the same matrix twice; reject files
  // where they disagree rather than silently trusting one side.
  std::vector<std::vector<int>> cols_from_rows(n);
  for (int i = 0; i < m; ++i)
    for (int j : rows[i]) cols_from_rows[j].push_back(i);
  if (cols_from_rows != cols)
    throw AlistParseError(last_line, "column and row adjacency sections are inconsistent");

  return ParityCheckMatrix(m, n, std::move(rows));
}

ParityCheckMatrix load_alist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open alist file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_alist(buf.str());
}

std::string serialize_alist(const ParityCheckMatrix& h) {
  const int n = h.variable_count();
  const int m = h.clause_count();
  std::string out;
  auto append_list = [&out](const std::vector<int>& vals, bool one_based) {
    if (vals.empty() && one_based) {
      // a lone padding zero keeps the line count intact for empty columns
      out += "0\n";
      return;
    }
    for (std::size_t a = 0; a < vals.size(); ++a) {
      if (a) out.push_back(' ');
      out += std::to_string(vals[a] + (one_based ? 1 : 0));
    }
    out.push_back('\n');
  };

  out += std::to_string(n) + " " + std::to_string(m) + "\n";
  out += std::to_string(h.max_col_degree()) + " " + std::to_string(h.max_row_degree()) + "\n";
  std::vector<int> col_deg(n), row_deg(m);
  for (int j = 0; j < n; ++j) col_deg[j] = static_cast<int>(h.col_support(j).size());
  for (int i = 0; i < m; ++i) row_deg[i] = static_cast<int>(h.row_support(i).size());
  append_list(col_deg, false);
  append_list(row_deg, false);
  for (int j = 0; j < n; ++j) append_list(h.col_support(j), true);
  for (int i = 0; i < m; ++i) append_list(h.row_support(i), true);
  return out;
}

void save_alist_file(const ParityCheckMatrix& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write alist file: " + path);
  out << serialize_alist(h);
  if (!out) throw std::runtime_error("write failed for alist file: " + path);
}

}  // namespace mpldpc
