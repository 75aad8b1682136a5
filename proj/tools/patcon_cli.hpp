#pragma once

// Command-line front end. Exit status follows grep:
//   0  containment holds / command succeeded
//   1  pattern avoided (check only)
//   2  any error
//   3  extremal search ran out of nodes (partial results printed)

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "patcon/patcon.hpp"

namespace patcon::cli {

enum Status : int { ok = 0, avoids = 1, error = 2, inconclusive = 3 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BitMatrix read_matrix(const std::string& path) {
  try {
    return parse_matrix(read_file(path));
  } catch (const format_error& e) {
    throw format_error(path + ": " + e.what());
  }
}

struct CheckOptions {
  std::string matrix, pattern, algo = "auto", bounds;
};

inline int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const BitMatrix a = read_matrix(o.matrix);
  const BitMatrix p = read_matrix(o.pattern);

  BoundTable bounds;
  if (!o.bounds.empty() && std::filesystem::exists(o.bounds)) {
    const CacheFile cf = parse_cache(read_file(o.bounds));
    if (cf.pattern && !(*cf.pattern == p))
      err << "warning: bounds cache was computed for a different pattern; prefilter disabled\n";
    else
      bounds = bounds_from_cache(cf, p);
  }

  bool contains = false;
  std::string used;
  if (o.algo == "auto") {
    const DispatchResult r = dispatch_detailed(a, p, bounds.empty() ? nullptr : &bounds);
    contains = r.contains;
    used = r.prefiltered ? "prefilter" : std::string(algorithm_name(r.algorithm));
  } else {
    auto algo = parse_algorithm(o.algo);
    if (!algo) throw std::invalid_argument("unknown algorithm '" + o.algo + "'");
    contains = run_algorithm(*algo, a, p);
    used = algorithm_name(*algo);
  }
  out << (contains ? "CONTAINS" : "AVOIDS") << " algo=" << used << "\n";
  return contains ? ok : avoids;
}

inline int cmd_classify(const std::string& pattern, std::ostream& out) {
  out << describe(classify_pattern(read_matrix(pattern))) << "\n";
  return ok;
}

struct ExtremalOptions {
  std::string pattern;
  std::size_t n = 0, n_max = 0;
  std::string witness_out, cache_out;
  std::uint64_t node_budget = default_node_budget;
};

inline int cmd_extremal(const ExtremalOptions& o, std::ostream& out, std::ostream& err) {
  const BitMatrix p = read_matrix(o.pattern);
  if (count_ones(p) == 0) throw std::invalid_argument("pattern has no ones; ex(n,P) is undefined");

  std::vector<std::size_t> ns;
  if (o.n) ns.push_back(o.n);
  for (std::size_t n = 1; n <= o.n_max; ++n) ns.push_back(n);

  std::vector<ExtremalRecord> done;
  int status = ok;
  for (std::size_t n : ns) {
    try {
      done.push_back(ex_exact(n, p, o.node_budget));
      out << "ex(" << n << ",P) = " << done.back().value << "\n";
    } catch (const search_inconclusive& e) {
      out << "ex(" << n << ",P) >= " << e.best.value << " (inconclusive)\n";
      err << "node budget exhausted at n=" << n << "\n";
      status = inconclusive;
      break;
    }
  }

  if (!o.witness_out.empty()) {
    std::filesystem::create_directories(o.witness_out);
    for (const auto& r : done) {
      std::ofstream f(std::filesystem::path(o.witness_out) / ("ex_n" + std::to_string(r.n) + ".txt"));
      if (!f) throw std::runtime_error("cannot write witness into '" + o.witness_out + "'");
      f << "# ex(" << r.n << ",P) = " << r.value << "\n" << serialize_dense(r.witness);
    }
  }
  if (!o.cache_out.empty()) {
    std::ofstream f(o.cache_out);
    if (!f) throw std::runtime_error("cannot write '" + o.cache_out + "'");
    f << serialize_cache(done);
  }
  return status;
}

struct BenchOptions {
  std::string pattern, csv;
  std::vector<std::size_t> sizes;
  double density = 0.5;
  std::uint64_t seed = 42;
  std::size_t trials = 5;
  std::vector<std::string> algos{"auto"};
};

inline int cmd_bench(const BenchOptions& o, std::ostream& out) {
  const BitMatrix p = read_matrix(o.pattern);
  BenchConfig cfg;
  cfg.sizes = o.sizes;
  cfg.density = o.density;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  const auto reports = bench_compare(o.algos, p, cfg);
  std::ofstream f(o.csv);
  if (!f) throw std::runtime_error("cannot write '" + o.csv + "'");
  write_csv(f, reports);
  for (const auto& r : reports) {
    out << "exponent algo=" << r.label << " value=";
    if (r.exponent) out << *r.exponent;
    else out << "absent";
    out << "\n";
  }
  return ok;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Decide forbidden 0-1 pattern containment", "patcon"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* sc_check = app.add_subcommand("check", "Does the matrix contain the pattern?");
  sc_check->add_option("--matrix", check.matrix, "Matrix file")->required();
  sc_check->add_option("--pattern", check.pattern, "Pattern file")->required();
  sc_check->add_option("--algo", check.algo,
                       "auto | naive | column | row | identity | tuple-identity | lshape | cross | allones");
  sc_check->add_option("--bounds", check.bounds, "Extremal cache used by the ones prefilter");

  std::string classify_pattern_path;
  auto* sc_classify = app.add_subcommand("classify", "Print the pattern's shape class");
  sc_classify->add_option("--pattern", classify_pattern_path, "Pattern file")->required();

  ExtremalOptions ext;
  auto* sc_ext = app.add_subcommand("extremal", "Exact ex(n,P) by branch and bound");
  sc_ext->add_option("--pattern", ext.pattern, "Pattern file")->required();
  auto* opt_n = sc_ext->add_option("--n", ext.n, "Single matrix side")->check(CLI::PositiveNumber);
  auto* opt_nmax = sc_ext->add_option("--n-max", ext.n_max, "All sides 1..N")->check(CLI::PositiveNumber);
  opt_n->excludes(opt_nmax);
  sc_ext->add_option("--witness-out", ext.witness_out, "Directory for witness matrices");
  sc_ext->add_option("--cache-out", ext.cache_out, "Extremal cache file to write");
  sc_ext->add_option("--node-budget", ext.node_budget, "Search node limit");

  BenchOptions bench;
  auto* sc_bench = app.add_subcommand("bench", "Time algorithms and fit the growth exponent");
  sc_bench->add_option("--pattern", bench.pattern, "Pattern file")->required();
  sc_bench->add_option("--sizes", bench.sizes, "Comma-separated sizes")->delimiter(',')->required();
  sc_bench->add_option("--density", bench.density, "Cell density")->check(CLI::Range(0.0, 1.0));
  sc_bench->add_option("--seed", bench.seed, "Generator seed");
  sc_bench->add_option("--trials", bench.trials, "Timed runs per size (>= 3)");
  sc_bench->add_option("--csv", bench.csv, "CSV output file")->required();
  sc_bench->add_option("--algos", bench.algos, "Comma-separated algorithm labels")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return error;
  }

  try {
    if (*sc_check) return cmd_check(check, out, err);
    if (*sc_classify) return cmd_classify(classify_pattern_path, out);
    if (*sc_ext) {
      if (!ext.n && !ext.n_max) throw std::invalid_argument("extremal needs --n or --n-max");
      return cmd_extremal(ext, out, err);
    }
    if (*sc_bench) return cmd_bench(bench, out);
  } catch (const std::exception& e) {
    err << "patcon: " << e.what() << "\n";
    return error;
  }
  return error;
}

}  // namespace patcon::cli
