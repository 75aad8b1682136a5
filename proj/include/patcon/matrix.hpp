#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace patcon {

class format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense 0-1 matrix. Indices are 1-based: (1,1) is the top-left cell.
class BitMatrix {
public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("BitMatrix dimensions must be positive");
  }

  static BitMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  static BitMatrix ones(std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    std::fill(m.cells_.begin(), m.cells_.end(), std::uint8_t{1});
    return m;
  }

  static BitMatrix identity(std::size_t k) {
    BitMatrix m(k, k);
    for (std::size_t i = 1; i <= k; ++i) m.set(i, i);
    return m;
  }

  /// Build from a list of 1-based (row, col) coordinates.
  static BitMatrix from_coords(std::size_t rows, std::size_t cols,
                               const std::vector<std::pair<std::size_t, std::size_t>>& ones) {
    BitMatrix m(rows, cols);
    for (auto [r, c] : ones) m.set(r, c);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool operator()(std::size_t r, std::size_t c) const noexcept {
    return cells_[(r - 1) * cols_ + (c - 1)] != 0;
  }

  bool at(std::size_t r, std::size_t c) const {
    check(r, c);
    return (*this)(r, c);
  }

  void set(std::size_t r, std::size_t c, bool v = true) {
    check(r, c);
    cells_[(r - 1) * cols_ + (c - 1)] = v ? 1 : 0;
  }

  /// Row `r` as a contiguous run of 0/1 bytes.
  const std::uint8_t* row_data(std::size_t r) const noexcept {
    return cells_.data() + (r - 1) * cols_;
  }

  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  void check(std::size_t r, std::size_t c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_)
      throw std::out_of_range("BitMatrix index (" + std::to_string(r) + "," +
                              std::to_string(c) + ") outside " + std::to_string(rows_) +
                              "x" + std::to_string(cols_));
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> cells_;
};

inline std::size_t count_ones(const BitMatrix& m) {
  return static_cast<std::size_t>(std::count(m.cells().begin(), m.cells().end(), std::uint8_t{1}));
}

inline BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t r = 1; r <= m.rows(); ++r)
    for (std::size_t c = 1; c <= m.cols(); ++c)
      if (m(r, c)) t.set(c, r);
  return t;
}

struct Entry {
  std::size_t row;
  std::size_t col;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// Row-major list of the 1-entries of a matrix, with the ordinal of each
/// entry inside its row (left to right) and its column (top to bottom).
struct SparseEntries {
  std::size_t source_rows = 0;
  std::size_t source_cols = 0;
  std::vector<Entry> entries;
  std::vector<std::size_t> row_rank;
  std::vector<std::size_t> col_rank;
  /// Number of ones in each row / column, indexed 1..rows / 1..cols (slot 0 unused).
  std::vector<std::size_t> row_count;
  std::vector<std::size_t> col_count;

  std::size_t count() const noexcept { return entries.size(); }
};

inline SparseEntries to_sparse(const BitMatrix& m) {
  SparseEntries s;
  s.source_rows = m.rows();
  s.source_cols = m.cols();
  s.row_count.assign(m.rows() + 1, 0);
  s.col_count.assign(m.cols() + 1, 0);
  const std::size_t x = count_ones(m);
  s.entries.reserve(x);
  s.row_rank.reserve(x);
  s.col_rank.reserve(x);
  for (std::size_t r = 1; r <= m.rows(); ++r) {
    const std::uint8_t* row = m.row_data(r);
    for (std::size_t c = 1; c <= m.cols(); ++c) {
      if (!row[c - 1]) continue;
      s.entries.push_back({r, c});
      s.row_rank.push_back(s.row_count[r]++);
      s.col_rank.push_back(s.col_count[c]++);
    }
  }
  return s;
}

inline BitMatrix to_dense(const SparseEntries& s) {
  BitMatrix m(s.source_rows, s.source_cols);
  for (const Entry& e : s.entries) m.set(e.row, e.col);
  return m;
}

// ---------------------------------------------------------------------------
// Text formats
//
// Dense:  one line per row of '0'/'1' characters; '#' lines are comments.
// Sparse: "sparse R C" header, then one "r c" line (1-based) per 1-entry.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline bool is_skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

inline std::size_t parse_positive(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t v = 0;
  if (tok.empty()) throw format_error("line " + std::to_string(line_no) + ": missing " + what);
  for (char ch : tok) {
    if (ch < '0' || ch > '9')
      throw format_error("line " + std::to_string(line_no) + ": bad " + what + " '" +
                         std::string(tok) + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
    if (v > (std::size_t{1} << 40))
      throw format_error("line " + std::to_string(line_no) + ": " + what + " too large");
  }
  if (v == 0) throw format_error("line " + std::to_string(line_no) + ": " + what + " must be positive");
  return v;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parse a matrix in either text format. Throws format_error on malformed input.
inline BitMatrix parse_matrix(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    auto line = detail::trim(text.substr(pos, nl - pos));
    if (!detail::is_skippable(line)) lines.emplace_back(line_no, line);
    pos = nl + 1;
  }
  if (lines.empty()) throw format_error("empty matrix input");

  auto [first_no, first] = lines.front();
  if (first.starts_with("sparse")) {
    auto head = detail::split_ws(first);
    if (head.size() != 3 || head[0] != "sparse")
      throw format_error("line " + std::to_string(first_no) + ": expected 'sparse R C'");
    const std::size_t rows = detail::parse_positive(head[1], first_no, "row count");
    const std::size_t cols = detail::parse_positive(head[2], first_no, "column count");
    if (rows * cols > (std::size_t{1} << 32))
      throw format_error("sparse matrix dimensions too large");
    BitMatrix m(rows, cols);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto [no, line] = lines[i];
      auto tok = detail::split_ws(line);
      if (tok.size() != 2)
        throw format_error("line " + std::to_string(no) + ": expected 'r c'");
      const std::size_t r = detail::parse_positive(tok[0], no, "row index");
      const std::size_t c = detail::parse_positive(tok[1], no, "column index");
      if (r > rows || c > cols)
        throw format_error("line " + std::to_string(no) + ": coordinate (" + std::to_string(r) +
                           "," + std::to_string(c) + ") out of range");
      if (m(r, c))
        throw format_error("line " + std::to_string(no) + ": duplicate coordinate (" +
                           std::to_string(r) + "," + std::to_string(c) + ")");
      m.set(r, c);
    }
    return m;
  }

  const std::size_t cols = first.size();
  BitMatrix m(lines.size(), cols);
  for (std::size_t r = 1; r <= lines.size(); ++r) {
    auto [no, line] = lines[r - 1];
    if (line.size() != cols)
      throw format_error("line " + std::to_string(no) + ": ragged rows (expected " +
                         std::to_string(cols) + " columns, got " + std::to_string(line.size()) + ")");
    for (std::size_t c = 1; c <= cols; ++c) {
      const char ch = line[c - 1];
      if (ch != '0' && ch != '1')
        throw format_error("line " + std::to_string(no) + ": invalid character '" +
                           std::string(1, ch) + "'");
      if (ch == '1') m.set(r, c);
    }
  }
  return m;
}

inline BitMatrix parse_matrix(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

inline std::string serialize_dense(const BitMatrix& m) {
  std::string out;
  out.reserve(m.rows() * (m.cols() + 1));
  for (std::size_t r = 1; r <= m.rows(); ++r) {
    for (std::size_t c = 1; c <= m.cols(); ++c) out.push_back(m(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline std::string serialize_sparse(const BitMatrix& m) {
  std::string out = "sparse " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 1; r <= m.rows(); ++r)
    for (std::size_t c = 1; c <= m.cols(); ++c)
      if (m(r, c)) out += std::to_string(r) + " " + std::to_string(c) + "\n";
  return out;
}

inline std::string serialize(const BitMatrix& m) { return serialize_dense(m); }

}  // namespace patcon
