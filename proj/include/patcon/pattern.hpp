#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>

#include "patcon/matrix.hpp"

namespace patcon {

// Pattern shapes with a dedicated containment algorithm.

struct ColumnOnes {     // k x 1 all ones
  std::size_t k;
  friend bool operator==(const ColumnOnes&, const ColumnOnes&) = default;
};
struct RowOnes {        // 1 x w all ones
  std::size_t w;
  friend bool operator==(const RowOnes&, const RowOnes&) = default;
};
struct AllOnes {        // k x l all ones
  std::size_t k, l;
  friend bool operator==(const AllOnes&, const AllOnes&) = default;
};
struct Identity {       // k x k, ones on the diagonal
  std::size_t k;
  friend bool operator==(const Identity&, const Identity&) = default;
};
struct TupleIdentity {  // jk x k, column i has ones in rows (i-1)j+1 .. ij
  std::size_t j, k;
  friend bool operator==(const TupleIdentity&, const TupleIdentity&) = default;
};
struct LShape {         // h x w, first column and last row
  std::size_t h, w;
  friend bool operator==(const LShape&, const LShape&) = default;
};
struct Cross {          // a x b, row c and column d
  std::size_t a, b, c, d;
  friend bool operator==(const Cross&, const Cross&) = default;
};
struct General {
  friend bool operator==(const General&, const General&) = default;
};

using PatternClass =
    std::variant<ColumnOnes, RowOnes, AllOnes, Identity, TupleIdentity, LShape, Cross, General>;

// ---------------------------------------------------------------------------
// Constructors

inline BitMatrix make_tuple_identity(std::size_t j, std::size_t k) {
  BitMatrix m(j * k, k);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t t = 1; t <= j; ++t) m.set((i - 1) * j + t, i);
  return m;
}

inline BitMatrix make_lshape(std::size_t h, std::size_t w) {
  BitMatrix m(h, w);
  for (std::size_t r = 1; r <= h; ++r) m.set(r, 1);
  for (std::size_t c = 1; c <= w; ++c) m.set(h, c);
  return m;
}

inline BitMatrix make_cross(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (c < 1 || c > a || d < 1 || d > b)
    throw std::invalid_argument("cross arm position outside the pattern");
  BitMatrix m(a, b);
  for (std::size_t col = 1; col <= b; ++col) m.set(c, col);
  for (std::size_t row = 1; row <= a; ++row) m.set(row, d);
  return m;
}

inline BitMatrix to_matrix(const PatternClass& pc) {
  return std::visit(
      [](const auto& p) -> BitMatrix {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ColumnOnes>) return BitMatrix::ones(p.k, 1);
        else if constexpr (std::is_same_v<T, RowOnes>) return BitMatrix::ones(1, p.w);
        else if constexpr (std::is_same_v<T, AllOnes>) return BitMatrix::ones(p.k, p.l);
        else if constexpr (std::is_same_v<T, Identity>) return BitMatrix::identity(p.k);
        else if constexpr (std::is_same_v<T, TupleIdentity>) return make_tuple_identity(p.j, p.k);
        else if constexpr (std::is_same_v<T, LShape>) return make_lshape(p.h, p.w);
        else if constexpr (std::is_same_v<T, Cross>) return make_cross(p.a, p.b, p.c, p.d);
        else throw std::invalid_argument("General has no canonical matrix");
      },
      pc);
}

// ---------------------------------------------------------------------------
// Shape recognizers. Each answers "does P match this definition", independent
// of the others; classify_pattern applies them in priority order.

inline bool is_all_ones(const BitMatrix& p) { return count_ones(p) == p.rows() * p.cols(); }

inline std::optional<ColumnOnes> match_column_ones(const BitMatrix& p) {
  if (p.cols() == 1 && is_all_ones(p)) return ColumnOnes{p.rows()};
  return std::nullopt;
}

inline std::optional<RowOnes> match_row_ones(const BitMatrix& p) {
  if (p.rows() == 1 && is_all_ones(p)) return RowOnes{p.cols()};
  return std::nullopt;
}

inline std::optional<AllOnes> match_all_ones(const BitMatrix& p) {
  if (is_all_ones(p)) return AllOnes{p.rows(), p.cols()};
  return std::nullopt;
}

inline std::optional<Identity> match_identity(const BitMatrix& p) {
  if (p.rows() == p.cols() && p == BitMatrix::identity(p.rows())) return Identity{p.rows()};
  return std::nullopt;
}

inline std::optional<TupleIdentity> match_tuple_identity(const BitMatrix& p) {
  const std::size_t k = p.cols();
  if (p.rows() % k != 0) return std::nullopt;
  const std::size_t j = p.rows() / k;
  if (p == make_tuple_identity(j, k)) return TupleIdentity{j, k};
  return std::nullopt;
}

inline std::optional<LShape> match_lshape(const BitMatrix& p) {
  if (p == make_lshape(p.rows(), p.cols())) return LShape{p.rows(), p.cols()};
  return std::nullopt;
}

/// First (c, d) in row-major order for which P is the cross on row c and column d.
inline std::optional<Cross> match_cross(const BitMatrix& p) {
  std::vector<std::size_t> full_rows, full_cols;
  for (std::size_t r = 1; r <= p.rows(); ++r) {
    bool full = true;
    for (std::size_t c = 1; c <= p.cols() && full; ++c) full = p(r, c);
    if (full) full_rows.push_back(r);
  }
  for (std::size_t c = 1; c <= p.cols(); ++c) {
    bool full = true;
    for (std::size_t r = 1; r <= p.rows() && full; ++r) full = p(r, c);
    if (full) full_cols.push_back(c);
  }
  const std::size_t expected = p.rows() + p.cols() - 1;
  if (count_ones(p) != expected) return std::nullopt;
  // With exactly a+b-1 ones, any full row and full column cover every one.
  if (!full_rows.empty() && !full_cols.empty())
    return Cross{p.rows(), p.cols(), full_rows.front(), full_cols.front()};
  return std::nullopt;
}

/// Canonical class: ColumnOnes > RowOnes > AllOnes > Identity > TupleIdentity
/// > LShape > Cross > General.
inline PatternClass classify_pattern(const BitMatrix& p) {
  if (auto m = match_column_ones(p)) return *m;
  if (auto m = match_row_ones(p)) return *m;
  if (auto m = match_all_ones(p)) return *m;
  if (auto m = match_identity(p)) return *m;
  if (auto m = match_tuple_identity(p)) return *m;
  if (auto m = match_lshape(p)) return *m;
  if (auto m = match_cross(p)) return *m;
  return General{};
}

inline std::string describe(const PatternClass& pc) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        using std::to_string;
        if constexpr (std::is_same_v<T, ColumnOnes>) return "column-ones k=" + to_string(p.k);
        else if constexpr (std::is_same_v<T, RowOnes>) return "row-ones w=" + to_string(p.w);
        else if constexpr (std::is_same_v<T, AllOnes>)
          return "all-ones k=" + to_string(p.k) + " l=" + to_string(p.l);
        else if constexpr (std::is_same_v<T, Identity>) return "identity k=" + to_string(p.k);
        else if constexpr (std::is_same_v<T, TupleIdentity>)
          return "tuple-identity j=" + to_string(p.j) + " k=" + to_string(p.k);
        else if constexpr (std::is_same_v<T, LShape>)
          return "lshape h=" + to_string(p.h) + " w=" + to_string(p.w);
        else if constexpr (std::is_same_v<T, Cross>)
          return "cross a=" + to_string(p.a) + " b=" + to_string(p.b) + " c=" + to_string(p.c) +
                 " d=" + to_string(p.d);
        else return "general";
      },
      pc);
}

}  // namespace patcon
