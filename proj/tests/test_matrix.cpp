#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "patcon/matrix.hpp"
#include "test_support.hpp"

using namespace patcon;

TEST(BitMatrix, RejectsEmptyDimensions) {
  EXPECT_THROW(BitMatrix(0, 3), std::invalid_argument);
  EXPECT_THROW(BitMatrix(3, 0), std::invalid_argument);
}

TEST(BitMatrix, OneBasedAccess) {
  BitMatrix m(2, 3);
  m.set(2, 3);
  EXPECT_TRUE(m.at(2, 3));
  EXPECT_FALSE(m.at(1, 1));
  EXPECT_THROW(m.at(0, 1), std::out_of_range);
  EXPECT_THROW(m.at(3, 1), std::out_of_range);
  EXPECT_THROW(m.set(1, 4), std::out_of_range);
}

TEST(Parse, DenseIdentity) {
  EXPECT_EQ(parse_matrix("10\n01\n"), BitMatrix::identity(2));
}

TEST(Parse, SparseIdentity) {
  EXPECT_EQ(parse_matrix("sparse 2 2\n1 1\n2 2\n"), BitMatrix::identity(2));
}

TEST(Parse, CommentsAndBlankLines) {
  EXPECT_EQ(parse_matrix("# a comment\n\n10\r\n  01  \n\n"), BitMatrix::identity(2));
  EXPECT_EQ(parse_matrix("# c\nsparse 2 2\n# inner\n1 1\n\n2 2"), BitMatrix::identity(2));
}

TEST(Parse, SparseWithNoEntries) {
  EXPECT_EQ(parse_matrix("sparse 3 2\n"), BitMatrix::zeros(3, 2));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_matrix("10\n011\n"), format_error);         // ragged
  EXPECT_THROW(parse_matrix("102\n"), format_error);             // bad char
  EXPECT_THROW(parse_matrix(""), format_error);                  // empty
  EXPECT_THROW(parse_matrix("# only comment\n\n"), format_error);
  EXPECT_THROW(parse_matrix("sparse 2 2\n3 1\n"), format_error); // out of range
  EXPECT_THROW(parse_matrix("sparse 2 2\n0 1\n"), format_error); // zero index
  EXPECT_THROW(parse_matrix("sparse 2 2\n1 1\n1 1\n"), format_error);  // duplicate
  EXPECT_THROW(parse_matrix("sparse 2\n"), format_error);
  EXPECT_THROW(parse_matrix("sparse 2 2\n1\n"), format_error);
  EXPECT_THROW(parse_matrix("sparse 2 x\n"), format_error);
}

TEST(Parse, FromStream) {
  std::istringstream in("110\n001\n");
  const BitMatrix m = parse_matrix(in);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(count_ones(m), 3u);
}

TEST(Serialize, RoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const BitMatrix m = test_util::random_matrix(rng, dim(rng), dim(rng), dens(rng));
    EXPECT_EQ(parse_matrix(serialize_dense(m)), m);
    EXPECT_EQ(parse_matrix(serialize_sparse(m)), m);
  }
  EXPECT_EQ(serialize(BitMatrix::identity(2)), "10\n01\n");
  EXPECT_EQ(serialize_sparse(BitMatrix::identity(2)), "sparse 2 2\n1 1\n2 2\n");
}

TEST(Transpose, Basics) {
  EXPECT_EQ(transpose(BitMatrix::ones(1, 3)), BitMatrix::ones(3, 1));
  EXPECT_EQ(transpose(BitMatrix::identity(4)), BitMatrix::identity(4));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const BitMatrix m = test_util::random_matrix(rng, 1 + i % 7, 1 + i % 5, 0.4);
    EXPECT_EQ(transpose(transpose(m)), m);
    const BitMatrix t = transpose(m);
    for (std::size_t r = 1; r <= m.rows(); ++r)
      for (std::size_t c = 1; c <= m.cols(); ++c) EXPECT_EQ(t(c, r), m(r, c));
  }
}

TEST(CountOnes, Examples) {
  EXPECT_EQ(count_ones(BitMatrix::zeros(5, 5)), 0u);
  EXPECT_EQ(count_ones(BitMatrix::identity(6)), 6u);
  EXPECT_EQ(count_ones(BitMatrix::ones(3, 4)), 12u);
}

TEST(ToSparse, Examples) {
  const SparseEntries z = to_sparse(BitMatrix::zeros(3, 3));
  EXPECT_EQ(z.count(), 0u);
  EXPECT_TRUE(z.entries.empty());

  const SparseEntries id = to_sparse(BitMatrix::identity(2));
  ASSERT_EQ(id.count(), 2u);
  EXPECT_EQ(id.entries[0], (Entry{1, 1}));
  EXPECT_EQ(id.entries[1], (Entry{2, 2}));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(id.row_rank[i], 0u);
    EXPECT_EQ(id.col_rank[i], 0u);
  }

  const SparseEntries full = to_sparse(BitMatrix::ones(2, 2));
  ASSERT_EQ(full.entries[1], (Entry{1, 2}));
  EXPECT_EQ(full.row_rank[1], 1u);
  EXPECT_EQ(full.col_rank[1], 0u);
}

TEST(ToSparse, InvariantsProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BitMatrix m = test_util::random_matrix(rng, 1 + i % 9, 1 + (i * 7) % 11, 0.35);
    const SparseEntries s = to_sparse(m);
    EXPECT_EQ(s.count(), count_ones(m));
    EXPECT_EQ(to_dense(s), m);
    for (std::size_t k = 0; k < s.count(); ++k) {
      if (k) EXPECT_LT(s.entries[k - 1], s.entries[k]);
      const Entry e = s.entries[k];
      EXPECT_TRUE(m(e.row, e.col));
      std::size_t left = 0, up = 0;
      for (std::size_t c = 1; c < e.col; ++c) left += m(e.row, c);
      for (std::size_t r = 1; r < e.row; ++r) up += m(r, e.col);
      EXPECT_EQ(s.row_rank[k], left);
      EXPECT_EQ(s.col_rank[k], up);
      EXPECT_LT(s.row_rank[k], s.row_count[e.row]);
      EXPECT_LT(s.col_rank[k], s.col_count[e.col]);
    }
  }
}
