#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "patcon/matrix.hpp"
#include "patcon/naive.hpp"
#include "patcon/pattern.hpp"

namespace patcon {

// ---------------------------------------------------------------------------
// Column / row of ones

/// True iff some column of A has at least k ones. Stops as soon as one does.
inline bool contains_column_ones(const BitMatrix& a, std::size_t k) {
  if (k > a.rows()) return false;
  // Storage is row-major, so the per-column tallies advance one row at a time
  // over the same cells a column-by-column scan reads.
  std::vector<std::size_t> count(a.cols(), 0);
  for (std::size_t r = 1; r <= a.rows(); ++r) {
    const std::uint8_t* row = a.row_data(r);
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (row[c] && ++count[c] >= k) return true;
  }
  return false;
}

/// True iff some row of A has at least w ones.
inline bool contains_row_ones(const BitMatrix& a, std::size_t w) {
  if (w > a.cols()) return false;
  for (std::size_t r = 1; r <= a.rows(); ++r) {
    const std::uint8_t* row = a.row_data(r);
    std::size_t n = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (row[c] && ++n >= w) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Identity

/// D[r][c] for 1 <= r <= rows+1, 1 <= c <= cols+1, with zero sentinels in row
/// rows+1 and column cols+1. D[r][c] is the largest s such that A restricted to
/// rows r.. and columns c.. contains the s x s identity.
class IdentityDP {
public:
  IdentityDP(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_((rows + 1) * (cols + 1), 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // Column-major so the column-by-column sweep walks contiguous memory.
  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return d_[(c - 1) * (rows_ + 1) + (r - 1)];
  }
  std::uint32_t& operator()(std::size_t r, std::size_t c) noexcept {
    return d_[(c - 1) * (rows_ + 1) + (r - 1)];
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> d_;
};

/// Full table of the identity recurrence, swept c = n..1 (outer), r = n..1 (inner).
inline IdentityDP identity_table(const BitMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  IdentityDP d(n, m);
  for (std::size_t c = m; c >= 1; --c)
    for (std::size_t r = n; r >= 1; --r) {
      std::uint32_t v = std::max(d(r + 1, c), d(r, c + 1));
      if (a(r, c)) v = std::max(v, 1 + d(r + 1, c + 1));
      d(r, c) = v;
    }
  return d;
}

/// Largest k such that A contains the k x k identity; 0 for an all-zero A.
inline std::size_t max_identity(const BitMatrix& a) { return identity_table(a)(1, 1); }

inline bool contains_identity(const BitMatrix& a, std::size_t k) {
  if (k == 0) return true;
  if (k > a.rows() || k > a.cols()) return false;
  // Same sweep as identity_table, keeping only columns c and c+1 of D.
  const std::size_t n = a.rows();
  std::vector<std::uint32_t> next(n + 2, 0), cur(n + 2, 0);
  for (std::size_t c = a.cols(); c >= 1; --c) {
    cur[n + 1] = 0;
    for (std::size_t r = n; r >= 1; --r) {
      std::uint32_t v = std::max(cur[r + 1], next[r]);
      if (a(r, c)) v = std::max(v, 1 + next[r + 1]);
      cur[r] = v;
      if (v >= k) return true;
    }
    std::swap(cur, next);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Tuple identity

/// True iff A contains the jk x k tuple identity. Same sweep as the identity
/// recurrence; a one at (r, c) with at least j ones at rows >= r in column c
/// closes a block whose lowest row is r_j, and the next block must start
/// strictly below it: D[r][c] = max(D[r][c], 1 + D[r_j + 1][c + 1]).
inline bool contains_tuple_identity(const BitMatrix& a, std::size_t j, std::size_t k) {
  if (j == 0 || k == 0) throw std::invalid_argument("tuple identity needs j, k >= 1");
  if (j * k > a.rows() || k > a.cols()) return false;
  const std::size_t n = a.rows();
  // Only columns c and c+1 of D are live at any time.
  std::vector<std::uint32_t> next(n + 2, 0), cur(n + 2, 0);
  std::vector<std::size_t> one_rows;  // rows of ones in column c, appended bottom-up
  one_rows.reserve(n);
  for (std::size_t c = a.cols(); c >= 1; --c) {
    one_rows.clear();
    cur[n + 1] = 0;
    for (std::size_t r = n; r >= 1; --r) {
      std::uint32_t v = std::max(cur[r + 1], next[r]);
      if (a(r, c)) {
        one_rows.push_back(r);
        if (one_rows.size() >= j) {
          const std::size_t r_j = one_rows[one_rows.size() - j];
          v = std::max(v, 1 + next[r_j + 1]);
        }
      }
      cur[r] = v;
      if (v >= k) return true;
    }
    std::swap(cur, next);
  }
  return false;
}

// ---------------------------------------------------------------------------
// L-shape

/// True iff A contains the h x w L-shape (first column and last row of ones).
/// Rows are scanned bottom to top with one counter per column: a row with
/// q >= w ones starts (or bumps) the counters of its first q-w+1 ones, and
/// every other one in the row bumps its counter only if already positive.
inline bool contains_lshape(const BitMatrix& a, std::size_t h, std::size_t w) {
  if (h == 0 || w == 0) throw std::invalid_argument("L-shape needs h, w >= 1");
  if (h > a.rows() || w > a.cols()) return false;
  std::vector<std::size_t> counter(a.cols() + 1, 0);
  std::vector<std::size_t> xs;
  xs.reserve(a.cols());
  for (std::size_t r = a.rows(); r >= 1; --r) {
    xs.clear();
    const std::uint8_t* row = a.row_data(r);
    for (std::size_t c = 1; c <= a.cols(); ++c)
      if (row[c - 1]) xs.push_back(c);
    const std::size_t q = xs.size();
    const std::size_t starters = q >= w ? q - w + 1 : 0;
    for (std::size_t i = 0; i < q; ++i) {
      std::size_t& cnt = counter[xs[i]];
      if (i < starters || cnt > 0) {
        if (++cnt >= h) return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Cross

/// Ones strictly left/right of each entry in its row and above/below it in
/// its column, parallel to SparseEntries::entries.
struct CrossCounts {
  std::vector<std::size_t> left, right, up, down;
};

inline CrossCounts cross_counts(const SparseEntries& e) {
  CrossCounts cc;
  const std::size_t x = e.count();
  cc.left.resize(x);
  cc.right.resize(x);
  cc.up.resize(x);
  cc.down.resize(x);
  for (std::size_t i = 0; i < x; ++i) {
    const Entry& en = e.entries[i];
    cc.left[i] = e.row_rank[i];
    cc.right[i] = e.row_count[en.row] - e.row_rank[i] - 1;
    cc.up[i] = e.col_rank[i];
    cc.down[i] = e.col_count[en.col] - e.col_rank[i] - 1;
  }
  return cc;
}

/// True iff some one of A has >= d-1 ones to its left, >= b-d to its right,
/// >= c-1 above and >= a-c below.
inline bool contains_cross(const SparseEntries& e, std::size_t a, std::size_t b, std::size_t c,
                           std::size_t d) {
  if (c < 1 || c > a || d < 1 || d > b)
    throw std::invalid_argument("cross arm position outside the pattern");
  if (a > e.source_rows || b > e.source_cols) return false;
  // The four counts of cross_counts, read straight off the ranks.
  for (std::size_t i = 0; i < e.count(); ++i) {
    const Entry& en = e.entries[i];
    const std::size_t left = e.row_rank[i], up = e.col_rank[i];
    const std::size_t right = e.row_count[en.row] - left - 1;
    const std::size_t down = e.col_count[en.col] - up - 1;
    if (left >= d - 1 && right >= b - d && up >= c - 1 && down >= a - c) return true;
  }
  return false;
}

inline bool contains_cross(const BitMatrix& m, std::size_t a, std::size_t b, std::size_t c,
                           std::size_t d) {
  if (c < 1 || c > a || d < 1 || d > b)
    throw std::invalid_argument("cross arm position outside the pattern");
  if (a > m.rows() || b > m.cols()) return false;
  // Same counts as the sparse form, without materialising the entry list.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> col_count(cols, 0), col_seen(cols, 0);
  for (std::size_t r = 1; r <= rows; ++r) {
    const std::uint8_t* row = m.row_data(r);
    for (std::size_t j = 0; j < cols; ++j) col_count[j] += row[j];
  }
  for (std::size_t r = 1; r <= rows; ++r) {
    const std::uint8_t* row = m.row_data(r);
    std::size_t row_count = 0;
    for (std::size_t j = 0; j < cols; ++j) row_count += row[j];
    std::size_t left = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row[j]) continue;
      const std::size_t up = col_seen[j]++;
      if (left >= d - 1 && row_count - left - 1 >= b - d && up >= c - 1 &&
          col_count[j] - up - 1 >= a - c)
        return true;
      ++left;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// All ones

namespace detail {

// Counts, for every t-subset of "slots", how many lines hold ones in all of
// them. Dense storage for t <= 2, a hash map keyed by a mixed-radix code when
// that fits in 64 bits, an ordered map of index tuples otherwise.
class SubsetCounter {
public:
  SubsetCounter(std::size_t slots, std::size_t t) : slots_(slots), t_(t) {
    if (t_ == 1) {
      dense_.assign(slots_ + 1, 0);
    } else if (t_ == 2 && slots_ <= 4096) {
      dense_.assign((slots_ + 1) * (slots_ + 1), 0);
    } else {
      long double cap = 1;
      for (std::size_t i = 0; i < t_; ++i) cap *= static_cast<long double>(slots_ + 1);
      radix_ok_ = cap < 1.8e19L;
    }
  }

  // subset: strictly increasing 1-based slot ids, size t.
  std::uint32_t bump(const std::vector<std::size_t>& subset) {
    if (t_ == 1) return ++dense_[subset[0]];
    if (t_ == 2 && !dense_.empty()) return ++dense_[subset[0] * (slots_ + 1) + subset[1]];
    if (radix_ok_) {
      std::uint64_t code = 0;
      for (std::size_t s : subset) code = code * (slots_ + 1) + s;
      return ++hashed_[code];
    }
    return ++ordered_[subset];
  }

private:
  std::size_t slots_;
  std::size_t t_;
  bool radix_ok_ = false;
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint32_t> hashed_;
  std::map<std::vector<std::size_t>, std::uint32_t> ordered_;
};

// Visits every t-subset of `items` in lexicographic order; stops when f returns true.
template <class F>
bool for_each_subset(const std::vector<std::size_t>& items, std::size_t t, F&& f) {
  const std::size_t q = items.size();
  if (t > q) return false;
  std::vector<std::size_t> idx(t), subset(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  for (;;) {
    for (std::size_t i = 0; i < t; ++i) subset[i] = items[idx[i]];
    if (f(subset)) return true;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == q - t + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t m = i; m < t; ++m) idx[m] = idx[m - 1] + 1;
  }
}

}  // namespace detail

/// True iff A contains the k x l all-ones matrix. Counters are kept for
/// t-subsets of the shorter pattern side, t = min(k, l); lines along the other
/// axis are scanned and a counter reaching the longer side reports containment.
inline bool contains_allones(const BitMatrix& a, std::size_t k, std::size_t l) {
  if (k == 0 || l == 0) throw std::invalid_argument("all-ones pattern needs k, l >= 1");
  if (k > a.rows() || l > a.cols()) return false;
  // l <= k: subsets of columns, scanning rows, threshold k.
  // l >  k: subsets of rows, scanning columns, threshold l.
  const bool by_rows = l <= k;
  const std::size_t t = by_rows ? l : k;
  const std::size_t threshold = by_rows ? k : l;
  const std::size_t lines = by_rows ? a.rows() : a.cols();
  const std::size_t slots = by_rows ? a.cols() : a.rows();
  detail::SubsetCounter counter(slots, t);
  std::vector<std::size_t> ones;
  ones.reserve(slots);
  for (std::size_t line = 1; line <= lines; ++line) {
    ones.clear();
    if (by_rows) {
      const std::uint8_t* row = a.row_data(line);
      for (std::size_t c = 1; c <= slots; ++c)
        if (row[c - 1]) ones.push_back(c);
    } else {
      for (std::size_t r = 1; r <= slots; ++r)
        if (a(r, line)) ones.push_back(r);
    }
    const bool found = detail::for_each_subset(ones, t, [&](const std::vector<std::size_t>& s) {
      return counter.bump(s) >= threshold;
    });
    if (found) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Ones-count prefilter

enum class Prefilter { contains, unknown };

/// `bound` must be at least ex(rows(A), P) for the pattern in question.
inline Prefilter ones_prefilter(const BitMatrix& a, std::size_t bound) {
  return count_ones(a) > bound ? Prefilter::contains : Prefilter::unknown;
}

/// Known upper bounds on ex(n, P), keyed by (n, P).
class BoundTable {
public:
  void add(std::size_t n, const BitMatrix& pattern, std::size_t bound) {
    for (auto& e : items_)
      if (e.n == n && e.pattern == pattern) {
        e.bound = std::min(e.bound, bound);
        return;
      }
    items_.push_back({n, pattern, bound});
  }

  std::optional<std::size_t> lookup(std::size_t n, const BitMatrix& pattern) const {
    for (const auto& e : items_)
      if (e.n == n && e.pattern == pattern) return e.bound;
    return std::nullopt;
  }

  bool empty() const noexcept { return items_.empty(); }

private:
  struct Item {
    std::size_t n;
    BitMatrix pattern;
    std::size_t bound;
  };
  std::vector<Item> items_;
};

// ---------------------------------------------------------------------------
// Dispatch

enum class Algorithm { naive, column, row, identity, tuple_identity, lshape, cross, allones };

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::naive: return "naive";
    case Algorithm::column: return "column";
    case Algorithm::row: return "row";
    case Algorithm::identity: return "identity";
    case Algorithm::tuple_identity: return "tuple-identity";
    case Algorithm::lshape: return "lshape";
    case Algorithm::cross: return "cross";
    case Algorithm::allones: return "allones";
  }
  return "naive";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  for (Algorithm a : {Algorithm::naive, Algorithm::column, Algorithm::row, Algorithm::identity,
                      Algorithm::tuple_identity, Algorithm::lshape, Algorithm::cross,
                      Algorithm::allones})
    if (algorithm_name(a) == s) return a;
  return std::nullopt;
}

/// Algorithm that handles the canonical class of a pattern.
inline Algorithm algorithm_for(const PatternClass& pc) {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ColumnOnes>) return Algorithm::column;
        else if constexpr (std::is_same_v<T, RowOnes>) return Algorithm::row;
        else if constexpr (std::is_same_v<T, AllOnes>) return Algorithm::allones;
        else if constexpr (std::is_same_v<T, Identity>) return Algorithm::identity;
        else if constexpr (std::is_same_v<T, TupleIdentity>) return Algorithm::tuple_identity;
        else if constexpr (std::is_same_v<T, LShape>) return Algorithm::lshape;
        else if constexpr (std::is_same_v<T, Cross>) return Algorithm::cross;
        else return Algorithm::naive;
      },
      pc);
}

/// True iff `algo` can decide containment of P (P matches its shape definition).
inline bool applicable(Algorithm algo, const BitMatrix& p) {
  switch (algo) {
    case Algorithm::naive: return true;
    case Algorithm::column: return match_column_ones(p).has_value();
    case Algorithm::row: return match_row_ones(p).has_value();
    case Algorithm::identity: return match_identity(p).has_value();
    case Algorithm::tuple_identity: return match_tuple_identity(p).has_value();
    case Algorithm::lshape: return match_lshape(p).has_value();
    case Algorithm::cross: return match_cross(p).has_value();
    case Algorithm::allones: return match_all_ones(p).has_value();
  }
  return false;
}

class algorithm_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Decide containment with a specific algorithm. Throws algorithm_mismatch when
/// P does not have the algorithm's shape.
inline bool run_algorithm(Algorithm algo, const BitMatrix& a, const BitMatrix& p) {
  auto mismatch = [&]() -> bool {
    throw algorithm_mismatch("algorithm '" + std::string(algorithm_name(algo)) +
                             "' does not apply to a " + describe(classify_pattern(p)) + " pattern");
  };
  switch (algo) {
    case Algorithm::naive: return contains_naive(a, p);
    case Algorithm::column:
      if (auto m = match_column_ones(p)) return contains_column_ones(a, m->k);
      return mismatch();
    case Algorithm::row:
      if (auto m = match_row_ones(p)) return contains_row_ones(a, m->w);
      return mismatch();
    case Algorithm::identity:
      if (auto m = match_identity(p)) return contains_identity(a, m->k);
      return mismatch();
    case Algorithm::tuple_identity:
      if (auto m = match_tuple_identity(p)) return contains_tuple_identity(a, m->j, m->k);
      return mismatch();
    case Algorithm::lshape:
      if (auto m = match_lshape(p)) return contains_lshape(a, m->h, m->w);
      return mismatch();
    case Algorithm::cross:
      if (auto m = match_cross(p)) return contains_cross(a, m->a, m->b, m->c, m->d);
      return mismatch();
    case Algorithm::allones:
      if (auto m = match_all_ones(p)) return contains_allones(a, m->k, m->l);
      return mismatch();
  }
  return mismatch();
}

struct DispatchResult {
  bool contains = false;
  Algorithm algorithm = Algorithm::naive;
  bool prefiltered = false;  // decided by the ones-count prefilter alone
};

/// Classify P, try the prefilter when a bound for (rows(A), P) is known and A
/// is square, then route to the matching specialized algorithm.
inline DispatchResult dispatch_detailed(const BitMatrix& a, const BitMatrix& p,
                                        const BoundTable* bounds = nullptr) {
  const Algorithm algo = algorithm_for(classify_pattern(p));
  if (bounds && a.rows() == a.cols()) {
    if (auto b = bounds->lookup(a.rows(), p); b && ones_prefilter(a, *b) == Prefilter::contains)
      return {true, algo, true};
  }
  return {run_algorithm(algo, a, p), algo, false};
}

inline bool dispatch(const BitMatrix& a, const BitMatrix& p, const BoundTable* bounds = nullptr) {
  return dispatch_detailed(a, p, bounds).contains;
}

}  // namespace patcon
