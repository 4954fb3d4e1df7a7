#include <cancx/catalog.hpp>
#include <cancx/equivariance.hpp>

#include <gtest/gtest.h>

using namespace cancx;

namespace {

QMatrix swap_factors() {
  QMatrix P(6, 6);
  for (std::size_t k = 0; k < 3; ++k) {
    P(k + 3, k) = 1;
    P(k, k + 3) = 1;
  }
  return P;
}

}  // namespace

TEST(ExpAd, ZeroIsIdentity) {
  const auto L = build_catalog_algebra("sl3");
  EXPECT_EQ(exp_ad_nilpotent(L, QVector(8, Rational(0))).matrix, QMatrix::identity(8));
}

TEST(ExpAd, Sl2E) {
  const auto L = build_catalog_algebra("sl2");
  const auto A = exp_ad_nilpotent(L, unit_vector(3, 0));
  // exp(ad e): e -> e, h -> h - 2e, f -> f + h - e
  QMatrix expected(3, 3);
  expected(0, 0) = 1;
  expected(0, 1) = -2;
  expected(1, 1) = 1;
  expected(0, 2) = -1;
  expected(1, 2) = 1;
  expected(2, 2) = 1;
  EXPECT_EQ(A.matrix, expected);
  EXPECT_TRUE(A.preserves_form);
  EXPECT_EQ(A.matrix * A.inverse, QMatrix::identity(3));
}

TEST(ExpAd, NonNilpotentRejected) {
  const auto L = build_catalog_algebra("sl2");
  EXPECT_THROW(exp_ad_nilpotent(L, unit_vector(3, 1)), std::domain_error);
}

TEST(ExpAd, AbelianGivesIdentity) {
  const auto L = build_catalog_algebra("abelian3");
  EXPECT_EQ(exp_ad_nilpotent(L, QVector{1, 2, 3}).matrix, QMatrix::identity(3));
}

TEST(Automorphism, MinusIdentityJudgedByValidator) {
  QMatrix minus = Rational(-1) * QMatrix::identity(3);
  EXPECT_TRUE(automorphism_defect(build_catalog_algebra("sl2"), minus).has_value());
  EXPECT_THROW(make_automorphism(build_catalog_algebra("sl2"), minus), std::invalid_argument);
  EXPECT_FALSE(automorphism_defect(build_catalog_algebra("abelian3"), minus).has_value());
}

TEST(Automorphism, SingularRejected) {
  EXPECT_EQ(automorphism_defect(build_catalog_algebra("sl2"), QMatrix(3, 3)), "not invertible");
}

TEST(Pullback, IdentityAndInverse) {
  const auto L = build_catalog_algebra("sl3");
  const auto A = exp_ad_nilpotent(L, nilpotent_directions(L, 1, 4)[0]);
  Rng rng(2);
  for (int s = 0; s < 10; ++s) {
    const auto c = random_chain(8, rng, 5);
    EXPECT_EQ(pullback(QMatrix::identity(8), c), c);
    const auto back = pullback(A.inverse, pullback(A, c));
    EXPECT_EQ(back, c);
    EXPECT_EQ(pullback(A, c).bidegrees(), c.bidegrees());
  }
}

TEST(Pullback, LinearCoefficientUsesTranspose) {
  // x_a o A = sum_c A[a][c] x_c
  const auto L = build_catalog_algebra("sl2");
  const auto A = exp_ad_nilpotent(L, unit_vector(3, 0));
  for (std::size_t a = 0; a < 3; ++a) {
    ComplexElement c(3, 1);
    Exponents alpha(3, 0);
    alpha[a] = 1;
    c.add({alpha, Exponents(3, 0), {0}}, 1);
    ComplexElement expected(3, 1);
    for (std::size_t k = 0; k < 3; ++k) {
      Exponents e(3, 0);
      e[k] = 1;
      expected.add({e, Exponents(3, 0), {0}}, A.matrix(a, k));
    }
    EXPECT_EQ(pullback(A, c), expected);
  }
}

TEST(Conjugation, Identity) {
  const auto L = build_catalog_algebra("sl2");
  const auto I = make_automorphism(L, QMatrix::identity(3));
  EXPECT_TRUE(conjugation_check(L, I, 10, 0));
  EXPECT_TRUE(conjugated_homology_check(L, I, 4));
}

TEST(Conjugation, Sl2ExpE) {
  const auto L = build_catalog_algebra("sl2");
  const auto A = exp_ad_nilpotent(L, unit_vector(3, 0));
  EXPECT_TRUE(conjugation_check(L, A, 20, 0));
  EXPECT_TRUE(conjugated_homology_check(L, A, 5));
  EXPECT_TRUE(ideal_transport_check(L, A));
}

TEST(Conjugation, Sl2xSl2FactorSwap) {
  const auto L = build_catalog_algebra("sl2xsl2");
  const auto A = make_automorphism(L, swap_factors());
  EXPECT_TRUE(A.preserves_form);
  EXPECT_TRUE(conjugation_check(L, A, 20, 0));
  EXPECT_TRUE(conjugated_homology_check(L, A, 4));
}

TEST(Conjugation, TwistedTableDiffers) {
  // d_pi is a genuinely different differential, yet the conjugation identity holds
  const auto L = build_catalog_algebra("sl2");
  const auto A = exp_ad_nilpotent(L, unit_vector(3, 2));
  EXPECT_FALSE(lambda_table(L, A.matrix).to_dense() == lambda_table(L).to_dense());
  EXPECT_TRUE(conjugation_check(L, A, 20, 3));
}

TEST(Conjugation, WrongInverseFails) {
  const auto L = build_catalog_algebra("sl2");
  auto A = exp_ad_nilpotent(L, unit_vector(3, 0));
  A.inverse = A.matrix;  // not the inverse
  EXPECT_FALSE(conjugation_check(L, A, 20, 0));
}

TEST(Conjugation, FiveDirectionsEveryNonabelian) {
  for (const auto& name : {"sl2", "so3", "gl2", "sl2xsl2"}) {
    const auto L = build_catalog_algebra(name);
    for (const auto& n : nilpotent_directions(L, 5, 0)) {
      const auto A = exp_ad_nilpotent(L, n);
      EXPECT_FALSE(A.matrix == QMatrix::identity(L.dim)) << name;
      EXPECT_TRUE(conjugation_check(L, A, 20, 0)) << name;
      EXPECT_TRUE(ideal_transport_check(L, A)) << name;
    }
  }
}

TEST(NilpotentDirections, AreNilpotent) {
  for (const auto& name : catalog_names()) {
    const auto L = build_catalog_algebra(name);
    for (const auto& n : nilpotent_directions(L, 4, 1)) EXPECT_NO_THROW(exp_ad_nilpotent(L, n)) << name;
  }
}
