#pragma once

#include <cancx/differential.hpp>
#include <cancx/exact_linalg.hpp>
#include <cancx/graded_basis.hpp>
#include <cancx/lie_algebra.hpp>
#include <cancx/parallel.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cancx {

// One row of a bidegree table: n = dim C_i, r = rank of d: C_i -> C_{i-1},
// h = n - r_i - r_{i+1}.
struct DegreeRow {
  std::size_t i = 0;
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::int64_t h = 0;
  bool certified = false;
};

struct BidegreeHomology {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<DegreeRow> table;   // consecutive exterior degrees
  std::optional<bool> euler_ok;   // only for full tables
  std::int64_t millis = 0;

  const DegreeRow* row(std::size_t i) const {
    for (const auto& r : table)
      if (r.i == i) return &r;
    return nullptr;
  }
};

struct HomologyOptions {
  RankOptions rank;
  std::size_t workers = 1;
  bool record_timing = true;
};

struct HomologyReport {
  std::string algebra;
  std::int64_t cutoff = 0;
  std::vector<BidegreeHomology> blocks;
};

namespace detail {

inline std::uint64_t component_dim(std::size_t dim, std::size_t i, std::int64_t p, std::int64_t q) {
  return ComponentBasis(dim, static_cast<std::int64_t>(i), p, q).size();
}

}  // namespace detail

/// Table for exterior degrees first..dim of bidegree (p,q); only the blocks
/// d_i with i >= max(first, 1) are assembled.
///
/// Certification: a modular rank never exceeds the rational one, so a
/// computed h_j = 0 forces both r_j and r_{j+1} to be exact; likewise a rank
/// reaching min(rows, cols). h_i is certified when both its ranks are.
inline BidegreeHomology homology_dims(const LambdaTable& table, std::int64_t p, std::int64_t q,
                                      const RankOptions& rank_opts = {}, std::size_t first = 0) {
  if (p < 0 || q < 0) throw std::invalid_argument("homology_dims: bidegree must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t dim = table.dim;
  BidegreeHomology out{p, q, {}, std::nullopt, 0};

  // ranks[i] for i in [first, dim+1]; rank of d_0 and d_{dim+1} is 0.
  std::vector<std::uint64_t> n(dim + 2, 0), r(dim + 2, 0);
  std::vector<bool> cert(dim + 2, true);
  for (std::size_t i = first; i <= dim; ++i) n[i] = detail::component_dim(dim, i, p, q);
  for (std::size_t i = std::max<std::size_t>(first, 1); i <= dim; ++i) {
    if (n[i] == 0 || detail::component_dim(dim, i - 1, p, q) == 0) continue;
    const auto result = rank(assemble_block(table, static_cast<std::int64_t>(i), p, q), rank_opts);
    r[i] = result.value;
    cert[i] = result.certified;
  }
  for (std::size_t i = first; i <= dim; ++i) {
    const auto h = static_cast<std::int64_t>(n[i]) - static_cast<std::int64_t>(r[i]) - static_cast<std::int64_t>(r[i + 1]);
    if (h == 0) cert[i] = cert[i + 1] = true;
  }
  for (std::size_t i = first; i <= dim; ++i) {
    const auto h = static_cast<std::int64_t>(n[i]) - static_cast<std::int64_t>(r[i]) - static_cast<std::int64_t>(r[i + 1]);
    out.table.push_back({i, n[i], r[i], h, cert[i] && cert[i + 1]});
  }
  if (first == 0) {
    std::int64_t hs = 0, ns = 0;
    for (const auto& row : out.table) {
      const std::int64_t sign = row.i % 2 == 0 ? 1 : -1;
      hs += sign * row.h;
      ns += sign * static_cast<std::int64_t>(row.n);
    }
    out.euler_ok = hs == ns;
  }
  out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline BidegreeHomology homology_dims(const LieAlgebra& L, std::int64_t p, std::int64_t q, const RankOptions& opts = {}) {
  return homology_dims(lambda_table(L), p, q, opts);
}

/// Exact identity sum (-1)^i h_i = sum (-1)^i n_i, plus h_i >= 0 and h_i = 0 where n_i = 0.
inline bool euler_check(const BidegreeHomology& b) {
  if (!b.euler_ok || !*b.euler_ok) return false;
  for (const auto& row : b.table)
    if (row.h < 0 || (row.n == 0 && row.h != 0)) return false;
  return true;
}

inline bool euler_check(const LieAlgebra& L, std::int64_t p, std::int64_t q, const RankOptions& opts = {}) {
  return euler_check(homology_dims(L, p, q, opts));
}

/// Bidegrees with p+q <= cutoff, by total degree then p.
inline std::vector<std::pair<std::int64_t, std::int64_t>> bidegrees_up_to(std::int64_t cutoff) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t s = 0; s <= cutoff; ++s)
    for (std::int64_t p = 0; p <= s; ++p) out.emplace_back(p, s - p);
  return out;
}

inline HomologyReport homology_report(const std::string& name, const LambdaTable& table, std::int64_t cutoff,
                                      const HomologyOptions& opts = {}, std::size_t first = 0) {
  HomologyReport report{name, cutoff, {}};
  const auto jobs = bidegrees_up_to(cutoff);
  report.blocks.resize(jobs.size());
  parallel_for(jobs.size(), opts.workers, [&](std::size_t k) {
    report.blocks[k] = homology_dims(table, jobs[k].first, jobs[k].second, opts.rank, first);
    if (!opts.record_timing) report.blocks[k].millis = 0;
  });
  return report;
}

inline HomologyReport homology_report(const LieAlgebra& L, std::int64_t cutoff, const HomologyOptions& opts = {}) {
  return homology_report(L.name, lambda_table(L), cutoff, opts);
}

struct VanishingWitness {
  std::size_t i = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t h = 0;
};

struct VanishingResult {
  bool passed = false;
  bool certified = false;
  std::size_t entries_checked = 0;
  std::vector<VanishingWitness> failures;
  std::vector<BidegreeHomology> blocks;
};

/// h_i = 0 for every i > rank and p+q <= cutoff. Only the blocks d_i with
/// i > rank are assembled.
inline VanishingResult verify_vanishing(const LambdaTable& table, std::size_t rank_bound, std::int64_t cutoff,
                                        const HomologyOptions& opts = {}) {
  VanishingResult result;
  result.passed = true;
  result.certified = true;
  if (rank_bound >= table.dim) return result;
  const auto report = homology_report("", table, cutoff, opts, rank_bound + 1);
  for (const auto& block : report.blocks) {
    for (const auto& row : block.table) {
      ++result.entries_checked;
      if (row.h != 0) {
        result.passed = false;
        result.failures.push_back({row.i, block.p, block.q, row.h});
      }
      result.certified = result.certified && row.certified;
    }
  }
  result.blocks = report.blocks;
  return result;
}

inline VanishingResult verify_vanishing(const LieAlgebra& L, std::int64_t cutoff, const HomologyOptions& opts = {}) {
  return verify_vanishing(lambda_table(L), L.rank, cutoff, opts);
}

inline nlohmann::json block_to_json(const BidegreeHomology& b) {
  nlohmann::json j;
  j["p"] = b.p;
  j["q"] = b.q;
  auto rows = nlohmann::json::array();
  for (const auto& r : b.table) rows.push_back({{"i", r.i}, {"n", r.n}, {"r", r.r}, {"h", r.h}, {"certified", r.certified}});
  j["table"] = std::move(rows);
  j["euler_ok"] = b.euler_ok.value_or(false);
  j["millis"] = b.millis;
  return j;
}

inline nlohmann::json report_to_json(const HomologyReport& report) {
  nlohmann::json j;
  j["algebra"] = report.algebra;
  j["cutoff"] = report.cutoff;
  auto blocks = nlohmann::json::array();
  for (const auto& b : report.blocks) blocks.push_back(block_to_json(b));
  j["blocks"] = std::move(blocks);
  return j;
}

inline void write_csv(std::ostream& os, const HomologyReport& report) {
  os << "algebra,p,q,i,n,r,h,certified\n";
  for (const auto& b : report.blocks)
    for (const auto& r : b.table)
      os << report.algebra << ',' << b.p << ',' << b.q << ',' << r.i << ',' << r.n << ',' << r.r << ',' << r.h << ','
         << (r.certified ? "true" : "false") << '\n';
}

}  // namespace cancx
