#include <gtest/gtest.h>

#include <sstream>

#include "patcon/bench.hpp"

using namespace patcon;

TEST(GenRandom, DensityExtremes) {
  EXPECT_EQ(gen_random(17, 0.0, 1), BitMatrix::zeros(17, 17));
  EXPECT_EQ(gen_random(17, 1.0, 1), BitMatrix::ones(17, 17));
  EXPECT_THROW(gen_random(4, 1.5, 1), std::invalid_argument);
}

TEST(GenRandom, Deterministic) {
  EXPECT_EQ(gen_random(64, 0.5, 42), gen_random(64, 0.5, 42));
  EXPECT_NE(gen_random(64, 0.5, 42), gen_random(64, 0.5, 43));
  const double frac = static_cast<double>(count_ones(gen_random(256, 0.3, 9))) / (256.0 * 256.0);
  EXPECT_NEAR(frac, 0.3, 0.01);
}

TEST(GenRandom, FrozenStream) {
  // First row of gen_random(8, 0.5, 42); pins the documented generator.
  const BitMatrix m = gen_random(8, 0.5, 42);
  std::mt19937_64 rng(42);
  for (std::size_t c = 1; c <= 8; ++c)
    EXPECT_EQ(m(1, c), static_cast<double>(rng() >> 11) * 0x1.0p-53 < 0.5);
}

TEST(GenAvoider, Examples) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const BitMatrix i2 = gen_avoider(n, BitMatrix::identity(2));
    EXPECT_EQ(count_ones(i2), 2 * n - 1);
    EXPECT_FALSE(contains_naive(i2, BitMatrix::identity(2)));

    const BitMatrix col = gen_avoider(n, BitMatrix::ones(3, 1));
    EXPECT_FALSE(contains_naive(col, BitMatrix::ones(3, 1)));
    EXPECT_EQ(count_ones(col), std::min<std::size_t>(2, n) * n);

    const BitMatrix l = gen_avoider(n, make_lshape(3, 2));
    EXPECT_FALSE(contains_naive(l, make_lshape(3, 2)));
    EXPECT_GE(count_ones(l), std::min<std::size_t>(2, n) * n);
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    const BitMatrix m = gen_avoider(8, BitMatrix::identity(k));
    EXPECT_FALSE(contains_naive(m, BitMatrix::identity(k)));
    EXPECT_EQ(count_ones(m), 2 * (k - 1) * 8 - (k - 1) * (k - 1));
  }
  EXPECT_FALSE(dispatch(gen_avoider(200, make_cross(3, 3, 2, 2)), make_cross(3, 3, 2, 2)));
  EXPECT_FALSE(dispatch(gen_avoider(100, BitMatrix::ones(1, 4)), BitMatrix::ones(1, 4)));
  EXPECT_FALSE(dispatch(gen_avoider(100, make_tuple_identity(2, 3)), make_tuple_identity(2, 3)));
  EXPECT_THROW(gen_avoider(8, parse_matrix("011\n100\n")), unsupported_pattern);
}

TEST(FitExponent, RecoversPowerLaw) {
  std::vector<BenchPoint> pts;
  for (std::size_t n : {100, 200, 400, 800}) {
    BenchPoint p;
    p.n = n;
    p.median = 3e-9 * static_cast<double>(n) * static_cast<double>(n);
    pts.push_back(p);
  }
  ASSERT_TRUE(fit_exponent(pts).has_value());
  EXPECT_NEAR(*fit_exponent(pts), 2.0, 1e-9);
  pts.resize(1);
  EXPECT_FALSE(fit_exponent(pts).has_value());
}

TEST(BenchCompare, AgreesWithOracleAndWritesCsv) {
  BenchConfig cfg;
  cfg.sizes = {16, 32};
  cfg.trials = 3;
  cfg.min_trial_seconds = 1e-5;
  const auto reports = bench_compare({"naive", "auto", "identity", "identity-dp"},
                                     BitMatrix::identity(3), cfg);
  ASSERT_EQ(reports.size(), 4u);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& naive_pt = reports[0].points[i];
    for (const auto& r : reports) EXPECT_EQ(r.points[i].contains, naive_pt.contains);
  }
  for (const auto& r : reports) {
    ASSERT_EQ(r.points.size(), 2u);
    EXPECT_EQ(r.points[0].seconds.size(), 3u);
    EXPECT_TRUE(r.exponent.has_value());
  }

  std::ostringstream csv;
  write_csv(csv, reports);
  const std::string text = csv.str();
  EXPECT_EQ(text.rfind("algo,n,trial,seconds,contains\n", 0), 0u);
  std::size_t summaries = 0, lines = 0;
  for (std::size_t pos = 0; (pos = text.find('\n', pos)) != std::string::npos; ++pos) ++lines;
  for (std::size_t pos = 0; (pos = text.find(",summary,", pos)) != std::string::npos; ++pos)
    ++summaries;
  EXPECT_EQ(summaries, 4u * 2u);
  EXPECT_EQ(lines, 1u + 4u * 2u * 3u + 8u);
}

TEST(BenchCompare, SingleSizeHasNoExponent) {
  BenchConfig cfg;
  cfg.sizes = {32};
  cfg.trials = 3;
  cfg.min_trial_seconds = 1e-5;
  const auto r = bench_compare({"column"}, BitMatrix::ones(3, 1), cfg);
  EXPECT_FALSE(r[0].exponent.has_value());
  EXPECT_GT(r[0].points[0].median, 0.0);
}

TEST(BenchCompare, ConfigurationErrors) {
  BenchConfig cfg;
  cfg.sizes = {16};
  cfg.trials = 2;
  EXPECT_THROW(bench_compare({"auto"}, BitMatrix::identity(2), cfg), std::invalid_argument);
  cfg.trials = 3;
  cfg.sizes = {32, 16};
  EXPECT_THROW(bench_compare({"auto"}, BitMatrix::identity(2), cfg), std::invalid_argument);
  cfg.sizes = {16};
  EXPECT_THROW(bench_compare({"lshape"}, BitMatrix::identity(2), cfg), algorithm_mismatch);
  EXPECT_THROW(bench_compare({"nope"}, BitMatrix::identity(2), cfg), std::invalid_argument);
}

TEST(BenchCompare, DeterministicOutcomes) {
  BenchConfig cfg;
  cfg.sizes = {20, 40, 80};
  cfg.trials = 3;
  cfg.min_trial_seconds = 1e-5;
  cfg.density = 0.1;
  const auto a = bench_compare({"cross"}, make_cross(3, 3, 2, 2), cfg);
  const auto b = bench_compare({"cross"}, make_cross(3, 3, 2, 2), cfg);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a[0].points[i].contains, b[0].points[i].contains);
}
