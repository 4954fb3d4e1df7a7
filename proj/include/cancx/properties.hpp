#pragma once

#include <cancx/differential.hpp>
#include <cancx/exact_linalg.hpp>
#include <cancx/homology.hpp>
#include <cancx/lie_algebra.hpp>

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cancx {

/// Fisher-Yates with the library Rng, so permutations are the same on every
/// standard library.
inline std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  Rng rng(seed);
  for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[rng.index(k)]);
  return perm;
}

/// Entry-by-entry comparison of (i, n, r, h); timing and certification are ignored.
inline bool same_tables(const HomologyReport& a, const HomologyReport& b) {
  if (a.blocks.size() != b.blocks.size()) return false;
  for (std::size_t k = 0; k < a.blocks.size(); ++k) {
    const auto &x = a.blocks[k], &y = b.blocks[k];
    if (x.p != y.p || x.q != y.q || x.table.size() != y.table.size()) return false;
    for (std::size_t t = 0; t < x.table.size(); ++t) {
      const auto &u = x.table[t], &v = y.table[t];
      if (u.i != v.i || u.n != v.n || u.r != v.r || u.h != v.h) return false;
    }
  }
  return true;
}

inline bool permutation_invariant(const LieAlgebra& L, const std::vector<std::size_t>& perm, std::int64_t cutoff,
                                  const HomologyOptions& opts = {}) {
  return same_tables(homology_report(L, cutoff, opts), homology_report(permute_basis(L, perm), cutoff, opts));
}

inline bool scaling_invariant(const LieAlgebra& L, const Rational& factor, std::int64_t cutoff,
                              const HomologyOptions& opts = {}) {
  return same_tables(homology_report(L, cutoff, opts), homology_report(scale_form(L, factor), cutoff, opts));
}

struct RankAgreement {
  std::size_t blocks_compared = 0;
  std::size_t blocks_skipped = 0;  // over the column bound
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> mismatches;  // (i, p, q)

  bool passed() const { return mismatches.empty(); }
};

/// The two-prime protocol (without exact fallback) against rank_exact on
/// every nonempty block with at most max_cols columns.
inline RankAgreement modular_matches_exact(const LambdaTable& table, std::int64_t cutoff, std::size_t max_cols = 2000) {
  RankAgreement out;
  for (const auto& [p, q] : bidegrees_up_to(cutoff))
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(table.dim); ++i) {
      const auto block = assemble_block(table, i, p, q);
      if (block.rows() == 0 || block.cols() == 0) continue;
      if (block.cols() > max_cols || static_cast<std::uint64_t>(block.rows()) * block.cols() > kExactRankLimit) {
        ++out.blocks_skipped;
        continue;
      }
      ++out.blocks_compared;
      const auto first = rank_modular(block, rank_prime(0));
      const auto second = rank_modular(block, rank_prime(1));
      const auto exact = rank_exact(block);
      if (!first || !second || *first != exact || *second != exact) out.mismatches.emplace_back(i, p, q);
    }
  return out;
}

}  // namespace cancx
