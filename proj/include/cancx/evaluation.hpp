#pragma once

#include <cancx/dense.hpp>
#include <cancx/differential.hpp>
#include <cancx/graded_basis.hpp>
#include <cancx/lie_algebra.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cancx {

struct PointPair {
  QVector x;
  QVector y;
};

inline bool commutes(const LieAlgebra& L, const PointPair& pt) { return is_zero(bracket(L, pt.x, pt.y)); }

/// Substitutes (x, y) into every coefficient; returns Lambda^i coordinates
/// indexed by the lexicographic rank of the exterior subset.
inline QVector evaluate(const ComplexElement& c, const PointPair& pt) {
  const std::size_t dim = c.dim();
  if (pt.x.size() != dim || pt.y.size() != dim) throw std::invalid_argument("evaluate: point dimension mismatch");
  QVector out(binomial(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(c.degree())), Rational(0));
  for (const auto& [b, coeff] : c.terms()) {
    Rational v = coeff;
    for (std::size_t a = 0; a < dim && v != 0; ++a) {
      for (std::uint32_t t = 0; t < b.alpha[a]; ++t) v *= pt.x[a];
      for (std::uint32_t t = 0; t < b.beta[a]; ++t) v *= pt.y[a];
    }
    if (v != 0) out[detail::subset_rank(b.wedge, dim)] += v;
  }
  return out;
}

namespace detail {

inline QVector random_combination(Rng& rng, const std::vector<QVector>& basis, std::size_t dim) {
  QVector v(dim, Rational(0));
  for (const auto& b : basis) {
    const Rational c(static_cast<long>(rng.uniform(-10, 10)));
    for (std::size_t k = 0; k < dim; ++k) v[k] += c * b[k];
  }
  return v;
}

}  // namespace detail

/// Random integer x in [-10,10]^dim and a random element y of ker(ad x).
inline PointPair sample_commuting_pair(const LieAlgebra& L, std::uint64_t seed) {
  Rng rng(seed);
  PointPair pt;
  pt.x = rng.integer_vector(L.dim);
  pt.y = detail::random_combination(rng, kernel_basis(ad_matrix(L, pt.x)), L.dim);
  return pt;
}

/// x a regular element of the span of `toral` (distinct random coefficients),
/// y a random element of its centralizer. With an empty toral list x is a
/// random regular integer point instead.
inline PointPair sample_regular_semisimple_pair(const LieAlgebra& L, const std::vector<std::size_t>& toral,
                                                std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PointPair pt;
    if (toral.empty()) {
      pt.x = rng.integer_vector(L.dim);
    } else {
      pt.x.assign(L.dim, Rational(0));
      std::vector<long> used;
      for (auto t : toral) {
        long c = 0;
        do {
          c = static_cast<long>(rng.uniform(-10, 10));
        } while (c == 0 || std::find(used.begin(), used.end(), c) != used.end());
        used.push_back(c);
        pt.x.at(t) = c;
      }
    }
    const auto ker = kernel_basis(ad_matrix(L, pt.x));
    if (ker.size() != L.rank) continue;
    pt.y = detail::random_combination(rng, ker, L.dim);
    return pt;
  }
  throw std::runtime_error("sample_regular_semisimple_pair: no regular element found");
}

/// dim {(u,v) : [u,y] + [x,v] = 0} at a commuting pair.
inline std::size_t commuting_tangent_dim(const LieAlgebra& L, const PointPair& pt) {
  if (!commutes(L, pt)) throw std::domain_error("commuting_tangent_dim: [x,y] != 0");
  const auto ad_x = ad_matrix(L, pt.x);
  const auto ad_y = ad_matrix(L, pt.y);
  QMatrix m(L.dim, 2 * L.dim);
  for (std::size_t r = 0; r < L.dim; ++r)
    for (std::size_t c = 0; c < L.dim; ++c) {
      m(r, c) = -ad_y(r, c);  // [u,y] = -[y,u]
      m(r, L.dim + c) = ad_x(r, c);
    }
  return 2 * L.dim - rank(m);
}

struct BoundaryCheckRecord {
  std::size_t chain = 0;
  std::size_t pair = 0;
  std::size_t degree = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool zero = true;
};

struct BoundaryTestResult {
  bool passed = true;
  std::size_t failures = 0;
  std::vector<BoundaryCheckRecord> records;
};

/// Random chain in C_i of a random bidegree with p+q <= max_total.
inline ComplexElement random_chain(std::size_t dim, Rng& rng, std::int64_t max_total = 6, std::size_t max_terms = 4) {
  const auto top = std::min<std::int64_t>(static_cast<std::int64_t>(dim), max_total / 2);
  const auto i = rng.uniform(1, top);
  const auto p = rng.uniform(i, max_total - i);
  const auto q = rng.uniform(i, max_total - p);
  const ComponentBasis basis(dim, i, p, q);
  ComplexElement c(dim, static_cast<std::size_t>(i));
  const auto terms = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_terms)));
  for (std::size_t t = 0; t < terms || c.is_zero(); ++t) {
    long coeff = 0;
    while (coeff == 0) coeff = static_cast<long>(rng.uniform(-5, 5));
    c.add(basis.unrank_index(static_cast<std::uint64_t>(rng.index(basis.size()))), Rational(coeff));
  }
  return c;
}

/// Every boundary d(b) must vanish at commuting pairs. `table` defines d, so
/// a corrupted table can be passed to exercise the failure path.
inline BoundaryTestResult boundary_vanishing_test(const LieAlgebra& L, const LambdaTable& table, std::size_t chains,
                                                  std::size_t pairs, std::uint64_t seed) {
  if (chains == 0 || pairs == 0) throw std::invalid_argument("boundary_vanishing_test: counts must be >= 1");
  Rng rng(seed);
  std::vector<PointPair> points;
  for (std::size_t k = 0; k < pairs; ++k) points.push_back(sample_commuting_pair(L, seed * 7919 + k + 1));
  BoundaryTestResult result;
  for (std::size_t c = 0; c < chains; ++c) {
    const auto chain = random_chain(L.dim, rng);
    const auto boundary = apply_differential(table, chain);
    const auto [p, q] = *chain.bidegrees().begin();
    for (std::size_t k = 0; k < pairs; ++k) {
      const bool zero = is_zero(evaluate(boundary, points[k]));
      result.records.push_back({c, k, chain.degree(), p, q, zero});
      if (!zero) {
        result.passed = false;
        ++result.failures;
      }
    }
  }
  return result;
}

inline BoundaryTestResult boundary_vanishing_test(const LieAlgebra& L, std::size_t chains, std::size_t pairs,
                                                  std::uint64_t seed) {
  return boundary_vanishing_test(L, lambda_table(L), chains, pairs, seed);
}

inline nlohmann::json record_to_json(const BoundaryCheckRecord& r) {
  return {{"chain", r.chain}, {"pair", r.pair}, {"degree", r.degree}, {"p", r.p}, {"q", r.q}, {"zero", r.zero}};
}

}  // namespace cancx
