#include <gtest/gtest.h>

#include <random>

#include "patcon/naive.hpp"
#include "test_support.hpp"

using namespace patcon;
using patcon::test_util::brute_force_contains;
using patcon::test_util::random_matrix;

TEST(Naive, SingleCellPattern) {
  const BitMatrix one = BitMatrix::ones(1, 1);
  EXPECT_FALSE(contains_naive(BitMatrix::zeros(4, 4), one));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const BitMatrix a = random_matrix(rng, 5, 5, 0.05);
    EXPECT_EQ(contains_naive(a, one), count_ones(a) >= 1);
  }
}

TEST(Naive, AntiDiagonalAvoidsIdentity2) {
  const BitMatrix anti = BitMatrix::from_coords(3, 3, {{1, 3}, {2, 2}, {3, 1}});
  EXPECT_FALSE(contains_naive(anti, BitMatrix::identity(2)));
}

TEST(Naive, FullMatrixContainsAnything) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i)
    EXPECT_TRUE(contains_naive(BitMatrix::ones(4, 4), random_matrix(rng, 3, 3, 0.5)));
}

TEST(Naive, PatternLargerThanMatrix) {
  EXPECT_FALSE(contains_naive(BitMatrix::ones(2, 5), BitMatrix::zeros(3, 1)));
  EXPECT_FALSE(contains_naive(BitMatrix::ones(5, 2), BitMatrix::zeros(1, 3)));
  EXPECT_TRUE(contains_naive(BitMatrix::zeros(3, 3), BitMatrix::zeros(3, 3)));
}

TEST(Naive, AgreesWithFullSubsetEnumeration) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pd(1, 3), ad(1, 6);
  for (int i = 0; i < 2000; ++i) {
    const BitMatrix a = random_matrix(rng, ad(rng), ad(rng), 0.55);
    const BitMatrix p = random_matrix(rng, pd(rng), pd(rng), 0.5);
    ASSERT_EQ(contains_naive(a, p), brute_force_contains(a, p))
        << "A=\n" << serialize(a) << "P=\n" << serialize(p);
  }
}

TEST(NaiveSparse, Examples) {
  EXPECT_FALSE(contains_naive_sparse(to_sparse(BitMatrix::zeros(4, 4)), BitMatrix::identity(2)));
  EXPECT_TRUE(contains_naive_sparse(to_sparse(BitMatrix::identity(2)), BitMatrix::identity(2)));
}

TEST(NaiveSparse, EqualsDenseOracle) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pd(1, 3);
  for (int i = 0; i < 1000; ++i) {
    const BitMatrix a = random_matrix(rng, 8, 8, 0.1 + 0.8 * (i % 5) / 4.0);
    const BitMatrix p = random_matrix(rng, pd(rng), pd(rng), 0.6);
    ASSERT_EQ(contains_naive_sparse(to_sparse(a), p), contains_naive(a, p))
        << "A=\n" << serialize(a) << "P=\n" << serialize(p);
  }
}

TEST(NaiveProperties, ReflexivityMonotonicityDuality) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> pd(1, 4), cell(1, 7);
  for (int i = 0; i < 500; ++i) {
    const BitMatrix p = random_matrix(rng, pd(rng), pd(rng), 0.5);
    EXPECT_TRUE(contains_naive(p, p));

    BitMatrix a = random_matrix(rng, 7, 7, 0.35);
    const bool before = contains_naive(a, p);
    EXPECT_EQ(before, contains_naive(transpose(a), transpose(p)));
    a.set(cell(rng), cell(rng));
    if (before) EXPECT_TRUE(contains_naive(a, p));

    // Turning a one of P into a zero keeps containment.
    BitMatrix weaker = p;
    for (std::size_t r = 1; r <= p.rows(); ++r)
      for (std::size_t c = 1; c <= p.cols(); ++c)
        if (p(r, c) && (r + c + i) % 2 == 0) weaker.set(r, c, false);
    if (contains_naive(a, p)) EXPECT_TRUE(contains_naive(a, weaker));
  }
}
