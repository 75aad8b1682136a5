#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "patcon/fast.hpp"
#include "patcon/matrix.hpp"
#include "patcon/naive.hpp"

namespace patcon {

struct ExtremalRecord {
  std::size_t n = 0;
  BitMatrix pattern{1, 1};
  std::size_t value = 0;
  BitMatrix witness{1, 1};
};

/// Thrown when the search runs out of nodes. `best` holds the best avoider
/// found so far, which is a lower bound only.
class search_inconclusive : public std::runtime_error {
public:
  search_inconclusive(ExtremalRecord best, std::uint64_t nodes)
      : std::runtime_error("node budget of " + std::to_string(nodes) +
                           " exhausted; ex(" + std::to_string(best.n) + ",P) >= " +
                           std::to_string(best.value)),
        best(std::move(best)),
        nodes(nodes) {}
  ExtremalRecord best;
  std::uint64_t nodes;
};

inline constexpr std::uint64_t default_node_budget = 100'000'000;

namespace detail {

// Depth-first over cells in row-major order, trying 1 before 0. A branch is
// cut when even filling every remaining cell cannot beat the best count, or
// as soon as the partial matrix contains P (adding ones never removes a
// containment). Only strict improvements replace the witness, so the result
// is the first maximum in 1-first row-major order.
class ExtremalSearch {
public:
  ExtremalSearch(std::size_t n, const BitMatrix& p, std::uint64_t budget)
      : n_(n), p_(p), budget_(budget), cur_(n, n), best_(n, n) {}

  ExtremalRecord run() {
    descend(0, 0);
    return {n_, p_, static_cast<std::size_t>(best_count_), best_};
  }

private:
  void descend(std::size_t cell, std::size_t placed) {
    if (++nodes_ > budget_)
      throw search_inconclusive(
          {n_, p_, static_cast<std::size_t>(best_count_ < 0 ? 0 : best_count_), best_}, budget_);
    const std::size_t total = n_ * n_;
    if (static_cast<long long>(placed + (total - cell)) <= best_count_) return;
    if (cell == total) {
      best_count_ = static_cast<long long>(placed);
      best_ = cur_;
      return;
    }
    const std::size_t r = cell / n_ + 1, c = cell % n_ + 1;
    cur_.set(r, c, true);
    if (!dispatch(cur_, p_)) descend(cell + 1, placed + 1);
    cur_.set(r, c, false);
    descend(cell + 1, placed);
  }

  std::size_t n_;
  const BitMatrix& p_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  long long best_count_ = -1;
  BitMatrix cur_;
  BitMatrix best_;
};

}  // namespace detail

/// Exact ex(n, P) with a witness. Throws std::invalid_argument for n == 0 or an
/// all-zero P, and search_inconclusive when the node budget runs out.
inline ExtremalRecord ex_exact(std::size_t n, const BitMatrix& p,
                               std::uint64_t node_budget = default_node_budget) {
  if (n == 0) throw std::invalid_argument("ex(n,P) needs n >= 1");
  if (count_ones(p) == 0)
    throw std::invalid_argument("ex(n,P) is undefined for an all-zero pattern");
  return detail::ExtremalSearch(n, p, node_budget).run();
}

/// Witness is n x n, has `value` ones and avoids the pattern.
inline bool verify_record(const ExtremalRecord& rec) {
  return rec.witness.rows() == rec.n && rec.witness.cols() == rec.n &&
         count_ones(rec.witness) == rec.value && !contains_naive(rec.witness, rec.pattern);
}

inline std::vector<ExtremalRecord> ex_table(std::size_t n_max, const BitMatrix& p,
                                            std::uint64_t node_budget = default_node_budget) {
  if (n_max == 0) throw std::invalid_argument("ex table needs n_max >= 1");
  std::vector<ExtremalRecord> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(ex_exact(n, p, node_budget));
  return out;
}

// ---------------------------------------------------------------------------
// Cache file: blocks of "n value" followed by the witness (dense), separated
// by blank lines. A leading "# pattern R C <bits>" comment records the pattern.

inline std::string pattern_tag(const BitMatrix& p) {
  std::string bits;
  for (char ch : serialize_dense(p))
    if (ch != '\n') bits.push_back(ch);
  return "# pattern " + std::to_string(p.rows()) + " " + std::to_string(p.cols()) + " " + bits;
}

inline std::string serialize_cache(const std::vector<ExtremalRecord>& recs) {
  std::string out;
  if (!recs.empty()) out += pattern_tag(recs.front().pattern) + "\n";
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (i) out += "\n";
    out += std::to_string(recs[i].n) + " " + std::to_string(recs[i].value) + "\n";
    out += serialize_dense(recs[i].witness);
  }
  return out;
}

struct CacheEntry {
  std::size_t n;
  std::size_t value;
  BitMatrix witness;
};

struct CacheFile {
  std::optional<BitMatrix> pattern;  // from the "# pattern" comment, when present
  std::vector<CacheEntry> entries;
};

inline CacheFile parse_cache(std::string_view text) {
  CacheFile cf;
  std::vector<std::vector<std::string_view>> blocks(1);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = detail::trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.starts_with("# pattern")) {
      auto tok = detail::split_ws(line.substr(9));
      if (tok.size() != 3) throw format_error("bad '# pattern' line in cache");
      const std::size_t r = detail::parse_positive(tok[0], 0, "pattern rows");
      const std::size_t c = detail::parse_positive(tok[1], 0, "pattern cols");
      if (tok[2].size() != r * c) throw format_error("pattern bits do not match dimensions");
      std::string dense;
      for (std::size_t i = 0; i < r; ++i) {
        dense.append(tok[2].substr(i * c, c));
        dense.push_back('\n');
      }
      cf.pattern = parse_matrix(dense);
      continue;
    }
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    blocks.back().push_back(line);
  }
  for (const auto& b : blocks) {
    if (b.empty()) continue;
    auto head = detail::split_ws(b.front());
    if (head.size() != 2) throw format_error("cache block must start with 'n value'");
    const std::size_t n = detail::parse_positive(head[0], 0, "n");
    std::size_t value = 0;
    for (char ch : head[1]) {
      if (ch < '0' || ch > '9') throw format_error("bad cache value");
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    std::string dense;
    for (std::size_t i = 1; i < b.size(); ++i) {
      dense.append(b[i]);
      dense.push_back('\n');
    }
    BitMatrix w = parse_matrix(dense);
    if (w.rows() != n || w.cols() != n) throw format_error("cache witness is not n x n");
    cf.entries.push_back({n, value, std::move(w)});
  }
  return cf;
}

/// Bounds usable by the prefilter: ex(n, P) <= value for each cached n.
inline BoundTable bounds_from_cache(const CacheFile& cf, const BitMatrix& pattern) {
  BoundTable t;
  for (const auto& e : cf.entries) t.add(e.n, pattern, e.value);
  return t;
}

}  // namespace patcon
