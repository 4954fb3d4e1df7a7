#include <cancx/catalog.hpp>
#include <cancx/differential.hpp>
#include <cancx/evaluation.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace cancx;

namespace {

BasisIndex gen(std::size_t dim, std::vector<std::uint32_t> wedge, Exponents alpha = {}, Exponents beta = {}) {
  if (alpha.empty()) alpha.assign(dim, 0);
  if (beta.empty()) beta.assign(dim, 0);
  return {std::move(alpha), std::move(beta), std::move(wedge)};
}

// d computed straight from the structure constants and the form, without
// LambdaTable: <e_k,[e_a,e_b]> = sum_c c[a][b][c] B[k][c].
ComplexElement reference_d(const LieAlgebra& L, const ComplexElement& c) {
  ComplexElement out(L.dim, c.degree() - 1);
  for (const auto& [b, coeff] : c.terms())
    for (std::size_t t = 0; t < b.wedge.size(); ++t) {
      const auto k = b.wedge[t];
      auto rest = b.wedge;
      rest.erase(rest.begin() + static_cast<long>(t));
      for (std::size_t a = 0; a < L.dim; ++a)
        for (std::size_t bb = 0; bb < L.dim; ++bb) {
          Rational m = 0;
          for (std::size_t cc = 0; cc < L.dim; ++cc) m += L.structure(a, bb, cc) * L.form(k, cc);
          if (m == 0) continue;
          auto alpha = b.alpha, beta = b.beta;
          ++alpha[a];
          ++beta[bb];
          out.add({alpha, beta, rest}, (t % 2 ? -1 : 1) * coeff * m);
        }
    }
  return out;
}

ComplexElement random_element(std::size_t dim, std::int64_t i, std::int64_t p, std::int64_t q, Rng& rng, int terms) {
  const ComponentBasis basis(dim, i, p, q);
  ComplexElement c(dim, static_cast<std::size_t>(i));
  for (int t = 0; t < terms; ++t) c.add(basis.unrank_index(rng.index(basis.size())), Rational(rng.uniform(-5, 5)));
  return c;
}

}  // namespace

TEST(LambdaTable, AbelianIsZero) {
  for (auto name : {"abelian1", "abelian2", "abelian3", "abelian4"}) EXPECT_TRUE(lambda_table(build_catalog_algebra(name)).is_zero());
  EXPECT_FALSE(lambda_table(build_catalog_algebra("sl2")).is_zero());
}

TEST(LambdaTable, Sl2HEntry) {
  const auto t = lambda_table(build_catalog_algebra("sl2"));
  EXPECT_EQ(t.at(1, 0, 2), 8);  // <h,[e,f]> = <h,h>
  EXPECT_EQ(t.at(1, 2, 0), -8);
}

TEST(LambdaTable, MatchesHandExpansion) {
  const auto t = lambda_table(build_catalog_algebra("sl2"));
  for (int k = 0; k < 3; ++k) {
    const auto expected = oracle::sl2_quadratic(k);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const auto it = expected.find({a, b});
        EXPECT_EQ(t.at(k, a, b), it == expected.end() ? 0 : it->second) << k << " " << a << " " << b;
      }
  }
}

TEST(LambdaTable, Antisymmetric) {
  for (const auto& name : catalog_names()) {
    const auto L = build_catalog_algebra(name);
    const auto t = lambda_table(L);
    for (std::size_t k = 0; k < L.dim; ++k)
      for (std::size_t a = 0; a < L.dim; ++a)
        for (std::size_t b = 0; b < L.dim; ++b) EXPECT_EQ(t.at(k, a, b) + t.at(k, b, a), 0) << name;
  }
}

TEST(AssembleBlock, AbelianZero) {
  const auto L = build_catalog_algebra("abelian2");
  for (std::int64_t i = 1; i <= 2; ++i) EXPECT_TRUE(assemble_block(L, i, 3, 2).is_zero());
}

TEST(AssembleBlock, Sl2DegreeOne) {
  const auto L = build_catalog_algebra("sl2");
  const auto m = assemble_block(L, 1, 1, 1);
  ASSERT_EQ(m.rows(), 9u);
  ASSERT_EQ(m.cols(), 3u);
  const ComponentBasis rows(3, 0, 1, 1);
  for (int k = 0; k < 3; ++k) {
    const auto expected = oracle::sl2_quadratic(k);
    const auto col = m.column(static_cast<std::size_t>(k));
    EXPECT_EQ(col.size(), expected.size());
    for (const auto& [r, v] : col) {
      const auto b = rows.unrank_index(r);
      int a = 0, bb = 0;
      for (int s = 0; s < 3; ++s) {
        if (b.alpha[s]) a = s;
        if (b.beta[s]) bb = s;
      }
      EXPECT_EQ(v, expected.at({a, bb}));
    }
  }
  EXPECT_EQ(oracle::rank(m), 3u);
}

TEST(AssembleBlock, DSquaredSl2TwoTwo) {
  const auto L = build_catalog_algebra("sl2");
  const auto prod = assemble_block(L, 1, 2, 2) * assemble_block(L, 2, 2, 2);
  EXPECT_EQ(prod.rows(), 36u);
  EXPECT_EQ(prod.cols(), 3u);
  EXPECT_TRUE(prod.is_zero());
}

TEST(AssembleBlock, DSquaredAllCatalog) {
  for (const auto& name : catalog_names()) {
    const auto L = build_catalog_algebra(name);
    const auto t = lambda_table(L);
    const std::int64_t cutoff = L.dim >= 6 ? 5 : 8;
    for (std::int64_t p = 0; p <= cutoff; ++p)
      for (std::int64_t q = 0; p + q <= cutoff; ++q)
        for (std::int64_t i = 2; i <= std::min<std::int64_t>(static_cast<std::int64_t>(L.dim), std::min(p, q)); ++i)
          EXPECT_TRUE((assemble_block(t, i - 1, p, q) * assemble_block(t, i, p, q)).is_zero()) << name << i << p << q;
  }
}

TEST(AssembleBlock, RejectsDegreeZero) {
  EXPECT_THROW(assemble_block(build_catalog_algebra("sl2"), 0, 1, 1), std::invalid_argument);
}

TEST(AssembleBlock, FormScalingDoublesBlock) {
  const auto L = build_catalog_algebra("sl3");
  const auto doubled = scale_form(L, 2);
  for (std::int64_t i = 1; i <= 3; ++i) {
    const auto a = assemble_block(L, i, 3, 3), b = assemble_block(doubled, i, 3, 3);
    EXPECT_EQ(b, a.scaled(2));
    EXPECT_EQ(rank(a).value, rank(b).value);
  }
}

TEST(ApplyDifferential, GeneratorGivesQuadratic) {
  const auto L = build_catalog_algebra("sl2");
  for (std::uint32_t k = 0; k < 3; ++k) {
    ComplexElement c(3, 1);
    c.add(gen(3, {k}), 1);
    const auto d = apply_differential(L, c);
    EXPECT_EQ(d.degree(), 0u);
    EXPECT_EQ(d.bidegrees(), (std::set<std::pair<std::int64_t, std::int64_t>>{{1, 1}}));
    for (const auto& [b, v] : d.terms()) {
      int a = 0, bb = 0;
      for (int s = 0; s < 3; ++s) {
        if (b.alpha[s]) a = s;
        if (b.beta[s]) bb = s;
      }
      EXPECT_EQ(v, oracle::sl2_quadratic(static_cast<int>(k)).at({a, bb}));
    }
  }
}

TEST(ApplyDifferential, Sl2IdentityCycle) {
  ComplexElement c(3, 1);
  for (std::uint32_t a = 0; a < 3; ++a) {
    Exponents alpha(3, 0);
    alpha[a] = 1;
    c.add(gen(3, {a}, alpha), 1);
  }
  EXPECT_EQ(c.bidegrees(), (std::set<std::pair<std::int64_t, std::int64_t>>{{2, 1}}));
  EXPECT_TRUE(apply_differential(build_catalog_algebra("sl2"), c).is_zero());
}

TEST(ApplyDifferential, Sl3TwiceIsZero) {
  const auto L = build_catalog_algebra("sl3");
  Rng rng(17);
  for (int s = 0; s < 5; ++s) {
    const auto c = random_element(8, 2, 3, 3, rng, 6);
    const auto dc = apply_differential(L, c);
    EXPECT_EQ(dc, reference_d(L, c));
    EXPECT_TRUE(apply_differential(L, dc).is_zero());
    EXPECT_TRUE(reference_d(L, reference_d(L, c)).is_zero());
  }
}

TEST(ApplyDifferential, DegreeZeroThrows) {
  ComplexElement c(3, 0);
  c.add(gen(3, {}), 1);
  EXPECT_THROW(apply_differential(build_catalog_algebra("sl2"), c), std::domain_error);
}

TEST(ApplyDifferential, MatchesReference) {
  Rng rng(23);
  for (const auto& name : catalog_names()) {
    const auto L = build_catalog_algebra(name);
    for (int s = 0; s < 10; ++s) {
      const auto c = random_chain(L.dim, rng, 6);
      EXPECT_EQ(apply_differential(L, c), reference_d(L, c)) << name;
    }
  }
}

TEST(ApplyDifferential, MatrixSymbolicAgreement) {
  Rng rng(31);
  for (const auto& name : {"sl2", "sl3", "gl2", "so3", "sl2xsl2"}) {
    const auto L = build_catalog_algebra(name);
    const auto t = lambda_table(L);
    for (int s = 0; s < 15; ++s) {
      const auto i = rng.uniform(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(L.dim)));
      const auto p = rng.uniform(i, i + 2), q = rng.uniform(i, i + 2);
      const ComponentBasis src(L.dim, i, p, q), dst(L.dim, i - 1, p, q);
      const auto n = rng.index(src.size());
      ComplexElement c(L.dim, static_cast<std::size_t>(i));
      c.add(src.unrank_index(n), 1);
      const auto block = assemble_block(t, i, p, q);
      EXPECT_EQ(to_coefficients(apply_differential(t, c), dst), block.column(n)) << name;
      // and on a whole vector
      const auto v = random_element(L.dim, i, p, q, rng, 4);
      EXPECT_EQ(from_coefficients(dst, block.multiply(to_coefficients(v, src))), apply_differential(t, v));
    }
  }
}

TEST(ComplexElement, RejectsMalformedTerms) {
  ComplexElement c(3, 2);
  EXPECT_THROW(c.add(gen(3, {1, 0}), 1), std::invalid_argument);
  EXPECT_THROW(c.add(gen(3, {1}), 1), std::invalid_argument);
  EXPECT_THROW(c.add(gen(3, {0, 3}), 1), std::invalid_argument);
  c.add(gen(3, {0, 1}), 2);
  c.add(gen(3, {0, 1}), -2);
  EXPECT_TRUE(c.is_zero());
}
