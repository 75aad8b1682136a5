#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "patcon/matrix.hpp"

// Reference containment decision for arbitrary patterns.
//
// Rows of A are chosen for the pattern rows by depth-first enumeration; for a
// fixed choice the pattern columns are matched greedily left to right (the
// first A column that satisfies pattern column j is taken before looking for
// column j+1). Whenever the pattern restricted to its first i rows already
// fails against the first i chosen rows, the subtree is skipped: a full match
// restricts to a match of every row prefix.

namespace patcon {

namespace detail {

// Generic over how A is probed so the dense and sparse oracles share the
// enumeration. `Probe` exposes rows(), cols() and
// next_col(row_ids, required_rows, from) -> first column >= from in which every
// row in required_rows has a one (or cols()+1 when none).
template <class Probe>
class RowSubsetSearch {
public:
  RowSubsetSearch(const Probe& a, const BitMatrix& p) : a_(a), p_(p), chosen_(p.rows()) {
    required_.resize(p.cols() + 1);
    for (std::size_t j = 1; j <= p.cols(); ++j)
      for (std::size_t i = 1; i <= p.rows(); ++i)
        if (p(i, j)) required_[j].push_back(i);
  }

  bool run() {
    if (p_.rows() > a_.rows() || p_.cols() > a_.cols()) return false;
    return descend(0, 1);
  }

private:
  // depth = number of pattern rows already assigned.
  bool descend(std::size_t depth, std::size_t first_row) {
    if (depth == p_.rows()) return true;
    const std::size_t remaining = p_.rows() - depth;
    for (std::size_t r = first_row; r + remaining - 1 <= a_.rows(); ++r) {
      chosen_[depth] = r;
      if (prefix_matches(depth + 1) && descend(depth + 1, r + 1)) return true;
    }
    return false;
  }

  bool prefix_matches(std::size_t prefix) {
    std::size_t col = 1;
    for (std::size_t j = 1; j <= p_.cols(); ++j) {
      rows_buf_.clear();
      for (std::size_t i : required_[j]) {
        if (i > prefix) break;
        rows_buf_.push_back(chosen_[i - 1]);
      }
      col = a_.next_col(rows_buf_, col);
      if (col > a_.cols()) return false;
      ++col;
    }
    return true;
  }

  const Probe& a_;
  const BitMatrix& p_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> required_;
  std::vector<std::size_t> rows_buf_;
};

class DenseProbe {
public:
  explicit DenseProbe(const BitMatrix& a) : a_(a) {}
  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }
  std::size_t next_col(const std::vector<std::size_t>& need, std::size_t from) const {
    for (std::size_t c = from; c <= a_.cols(); ++c) {
      bool ok = true;
      for (std::size_t r : need)
        if (!a_(r, c)) { ok = false; break; }
      if (ok) return c;
    }
    return a_.cols() + 1;
  }

private:
  const BitMatrix& a_;
};

// Per-row sorted column lists; columns satisfying a row set are found by
// leapfrogging lower_bound over the lists involved.
class SparseProbe {
public:
  SparseProbe(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries)
      : rows_(rows), cols_(cols), by_row_(rows + 1) {
    for (const Entry& e : entries) by_row_[e.row].push_back(e.col);
    for (auto& v : by_row_) std::sort(v.begin(), v.end());
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t next_col(const std::vector<std::size_t>& need, std::size_t from) const {
    if (need.empty()) return from <= cols_ ? from : cols_ + 1;
    std::size_t c = from;
    for (;;) {
      bool stable = true;
      for (std::size_t r : need) {
        const auto& v = by_row_[r];
        auto it = std::lower_bound(v.begin(), v.end(), c);
        if (it == v.end()) return cols_ + 1;
        if (*it != c) {
          c = *it;
          stable = false;
        }
      }
      if (stable) return c;
    }
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<std::size_t>> by_row_;
};

}  // namespace detail

/// True iff some order-preserving choice of rows and columns of A maps every
/// one of P onto a one of A.
inline bool contains_naive(const BitMatrix& a, const BitMatrix& p) {
  if (p.rows() > a.rows() || p.cols() > a.cols()) return false;
  // Enumerate subsets along the pattern's shorter side.
  if (p.rows() > p.cols()) {
    const BitMatrix at = transpose(a), pt = transpose(p);
    detail::DenseProbe probe(at);
    return detail::RowSubsetSearch(probe, pt).run();
  }
  detail::DenseProbe probe(a);
  return detail::RowSubsetSearch(probe, p).run();
}

/// Same decision computed from the coordinate list of A's ones.
inline bool contains_naive_sparse(const SparseEntries& e, const BitMatrix& p) {
  if (p.rows() > e.source_rows || p.cols() > e.source_cols) return false;
  if (p.rows() > p.cols()) {
    std::vector<Entry> flipped;
    flipped.reserve(e.count());
    for (const Entry& x : e.entries) flipped.push_back({x.col, x.row});
    detail::SparseProbe probe(e.source_cols, e.source_rows, flipped);
    return detail::RowSubsetSearch(probe, transpose(p)).run();
  }
  detail::SparseProbe probe(e.source_rows, e.source_cols, e.entries);
  return detail::RowSubsetSearch(probe, p).run();
}

}  // namespace patcon
