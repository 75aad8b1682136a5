#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "patcon/fast.hpp"
#include "patcon/matrix.hpp"
#include "patcon/naive.hpp"
#include "patcon/pattern.hpp"

namespace patcon {

// ---------------------------------------------------------------------------
// Generators

/// Cells drawn row-major from std::mt19937_64(seed); a cell is 1 when the top
/// 53 bits of the next draw, read as a fraction in [0,1), fall below
/// `density`. mt19937_64 is fully specified by the standard, so the output is
/// identical across platforms.
inline BitMatrix gen_random(std::size_t n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  BitMatrix m(n, n);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= n; ++c) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) m.set(r, c);
    }
  return m;
}

class unsupported_pattern : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void fill_rows(BitMatrix& m, std::size_t count) {
  for (std::size_t r = 1; r <= std::min(count, m.rows()); ++r)
    for (std::size_t c = 1; c <= m.cols(); ++c) m.set(r, c);
}

inline void fill_cols(BitMatrix& m, std::size_t count) {
  for (std::size_t c = 1; c <= std::min(count, m.cols()); ++c)
    for (std::size_t r = 1; r <= m.rows(); ++r) m.set(r, c);
}

}  // namespace detail

/// Dense n x n matrix avoiding P, for stressing full scans.
///   column k / L-shape h x w / cross a x b / tuple identity jk x k / all ones k x l:
///       the first (pattern rows - 1) rows full; no column gets enough ones.
///   row w: the first w-1 columns full.
///   identity k: the first k-1 rows and the first k-1 columns full.
/// The result is checked with dispatch (and with the oracle for n <= 8);
/// throws unsupported_pattern for General patterns or a failed check.
inline BitMatrix gen_avoider(std::size_t n, const BitMatrix& p) {
  BitMatrix m(n, n);
  const PatternClass pc = classify_pattern(p);
  if (std::holds_alternative<General>(pc))
    throw unsupported_pattern("no avoider construction for a general pattern");
  if (auto* row = std::get_if<RowOnes>(&pc)) {
    detail::fill_cols(m, row->w - 1);
  } else if (auto* id = std::get_if<Identity>(&pc)) {
    detail::fill_rows(m, id->k - 1);
    detail::fill_cols(m, id->k - 1);
  } else {
    detail::fill_rows(m, p.rows() - 1);
  }
  const bool contained = dispatch(m, p) || (n <= 8 && contains_naive(m, p));
  if (contained)
    throw unsupported_pattern("avoider construction failed verification for " + describe(pc));
  return m;
}

// ---------------------------------------------------------------------------
// Benchmarks

/// A timed algorithm: its CSV label and the decision it makes for (A, P).
struct BenchAlgo {
  std::string label;
  std::function<bool(const BitMatrix&, const BitMatrix&)> run;
  std::function<bool(const BitMatrix&)> applies;
};

/// Labels: "auto", "identity-dp" (full identity table, no early exit), and the
/// names accepted by parse_algorithm.
inline BenchAlgo bench_algo(const std::string& label) {
  if (label == "auto")
    return {label, [](const BitMatrix& a, const BitMatrix& p) { return dispatch(a, p); },
            [](const BitMatrix&) { return true; }};
  if (label == "identity-dp")
    return {label,
            [](const BitMatrix& a, const BitMatrix& p) { return max_identity(a) >= p.rows(); },
            [](const BitMatrix& p) { return match_identity(p).has_value(); }};
  auto algo = parse_algorithm(label);
  if (!algo) throw std::invalid_argument("unknown algorithm label '" + label + "'");
  const Algorithm a = *algo;
  return {label, [a](const BitMatrix& m, const BitMatrix& p) { return run_algorithm(a, m, p); },
          [a](const BitMatrix& p) { return applicable(a, p); }};
}

struct BenchPoint {
  std::size_t n = 0;
  std::vector<double> seconds;  // per trial, per call
  std::vector<bool> contains;   // per trial
  double median = 0.0;
};

struct BenchReport {
  std::string label;
  std::vector<BenchPoint> points;
  std::optional<double> exponent;  // absent with fewer than two sizes
  bool monotone = true;            // medians nondecreasing in n
  std::string generator;
  std::uint64_t seed = 0;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  double density = 0.5;
  std::uint64_t seed = 42;
  std::size_t trials = 5;
  // Each trial repeats the call until at least this much time has elapsed and
  // reports the per-call average; keeps sub-millisecond runs measurable.
  double min_trial_seconds = 2e-3;
  std::size_t oracle_max_n = 64;
};

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

/// Least-squares slope of log(median) against log(n).
inline std::optional<double> fit_exponent(const std::vector<BenchPoint>& pts) {
  if (pts.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    if (p.median <= 0) return std::nullopt;
    const double x = std::log(static_cast<double>(p.n)), y = std::log(p.median);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(pts.size());
  const double den = k * sxx - sx * sx;
  if (den == 0) return std::nullopt;
  const double slope = (k * sxy - sx * sy) / den;
  if (!std::isfinite(slope)) return std::nullopt;
  return slope;
}

using PatternFamily = std::function<BitMatrix(std::size_t n)>;

/// Times each algorithm on gen_random(n, density, seed) for every n, with the
/// pattern for size n taken from `family`. Inputs are identical across
/// algorithms. Outcomes for n <= oracle_max_n are checked against the oracle.
inline std::vector<BenchReport> bench_compare(const std::vector<std::string>& labels,
                                              const PatternFamily& family,
                                              const BenchConfig& cfg) {
  if (cfg.trials < 3) throw std::invalid_argument("need at least 3 trials per size");
  if (cfg.sizes.empty()) throw std::invalid_argument("no sizes given");
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    if (cfg.sizes[i] == 0) throw std::invalid_argument("sizes must be positive");
    if (i && cfg.sizes[i] <= cfg.sizes[i - 1])
      throw std::invalid_argument("sizes must be strictly increasing");
  }
  std::vector<BenchAlgo> algos;
  for (const auto& l : labels) algos.push_back(bench_algo(l));

  std::ostringstream gen;
  gen << "gen_random(density=" << cfg.density << ")";

  std::vector<BenchReport> reports(algos.size());
  for (std::size_t i = 0; i < algos.size(); ++i) {
    reports[i].label = algos[i].label;
    reports[i].generator = gen.str();
    reports[i].seed = cfg.seed;
  }

  using clock = std::chrono::steady_clock;
  for (std::size_t n : cfg.sizes) {
    const BitMatrix a = gen_random(n, cfg.density, cfg.seed);
    const BitMatrix p = family(n);
    std::optional<bool> truth;
    if (n <= cfg.oracle_max_n) truth = contains_naive(a, p);
    for (std::size_t i = 0; i < algos.size(); ++i) {
      const auto& algo = algos[i];
      if (!algo.applies(p))
        throw algorithm_mismatch("algorithm '" + algo.label + "' does not apply to a " +
                                 describe(classify_pattern(p)) + " pattern");
      // Warm-up, also sizes the repetition count.
      auto t0 = clock::now();
      volatile bool sink = algo.run(a, p);
      const double warm = std::chrono::duration<double>(clock::now() - t0).count();
      std::size_t reps = 1;
      if (warm < cfg.min_trial_seconds)
        reps = static_cast<std::size_t>(std::ceil(cfg.min_trial_seconds / std::max(warm, 1e-9)));
      reps = std::min<std::size_t>(reps, 1'000'000);

      BenchPoint pt;
      pt.n = n;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        bool result = false;
        const auto start = clock::now();
        for (std::size_t k = 0; k < reps; ++k) result = algo.run(a, p);
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        sink = result;
        if (truth && *truth != result)
          throw std::logic_error("algorithm '" + algo.label + "' disagrees with the oracle at n=" +
                                 std::to_string(n));
        pt.seconds.push_back(secs / static_cast<double>(reps));
        pt.contains.push_back(result);
      }
      (void)sink;
      pt.median = median_of(pt.seconds);
      reports[i].points.push_back(std::move(pt));
    }
  }
  for (auto& r : reports) {
    r.exponent = fit_exponent(r.points);
    for (std::size_t i = 1; i < r.points.size(); ++i)
      if (r.points[i].median < r.points[i - 1].median) r.monotone = false;
  }
  return reports;
}

inline std::vector<BenchReport> bench_compare(const std::vector<std::string>& labels,
                                              const BitMatrix& pattern, const BenchConfig& cfg) {
  return bench_compare(labels, [&pattern](std::size_t) { return pattern; }, cfg);
}

/// CSV: "algo,n,trial,seconds,contains", one row per timed run, then one
/// summary row per (algo, n) with trial=summary, the median in the seconds
/// column and the fitted exponent (empty when absent) in the last column.
inline void write_csv(std::ostream& out, const std::vector<BenchReport>& reports) {
  out << "algo,n,trial,seconds,contains\n";
  auto old_prec = out.precision(9);
  for (const auto& r : reports)
    for (const auto& p : r.points)
      for (std::size_t t = 0; t < p.seconds.size(); ++t)
        out << r.label << ',' << p.n << ',' << (t + 1) << ',' << p.seconds[t] << ','
            << (p.contains[t] ? 1 : 0) << '\n';
  for (const auto& r : reports)
    for (const auto& p : r.points) {
      out << r.label << ',' << p.n << ",summary," << p.median << ',';
      if (r.exponent) out << *r.exponent;
      out << '\n';
    }
  out.precision(old_prec);
}

}  // namespace patcon
