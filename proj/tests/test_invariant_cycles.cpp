#include <cancx/catalog.hpp>
#include <cancx/evaluation.hpp>
#include <cancx/invariant_cycles.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace cancx;

namespace {

using Bidegrees = std::set<std::pair<std::int64_t, std::int64_t>>;

ComplexElement generator(std::size_t dim, std::uint32_t k) {
  ComplexElement c(dim, 1);
  c.add({Exponents(dim, 0), Exponents(dim, 0), {k}}, 1);
  return c;
}

}  // namespace

TEST(LgGenerators, CountAndEquivariance) {
  for (const auto& name : catalog_names()) {
    const auto L = build_catalog_algebra(name);
    const auto gens = lg_generators(L);
    EXPECT_EQ(gens.size(), L.rank) << name;
    for (const auto& g : gens) EXPECT_TRUE(is_equivariant(L, g)) << name << " " << g.label;
  }
}

TEST(LgGenerators, Sl2Identity) {
  const auto gens = lg_generators(build_catalog_algebra("sl2"));
  ASSERT_EQ(gens.size(), 1u);
  const QVector x{3, -1, 4};
  EXPECT_EQ(gens[0].evaluate(x), x);
  EXPECT_EQ(gens[0].degree, 1u);
}

TEST(LgGenerators, Abelian2Constants) {
  const auto gens = lg_generators(build_catalog_algebra("abelian2"));
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].evaluate({5, 6}), (QVector{1, 0}));
  EXPECT_EQ(gens[1].evaluate({5, 6}), (QVector{0, 1}));
}

TEST(LgGenerators, Sl3TracelessSquare) {
  const auto entry = catalog_entry("sl3");
  const auto gens = lg_generators(entry.algebra);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[1].degree, 2u);
  // compare with x^2 - tr(x^2)/3 computed on 3x3 matrices at random points
  Rng rng(8);
  for (int s = 0; s < 5; ++s) {
    const auto x = rng.integer_vector(8);
    const auto X = entry.realization.element(x);
    QMatrix sq = X * X;
    sq = sq - (sq.trace() / 3) * QMatrix::identity(3);
    EXPECT_EQ(entry.realization.element(gens[1].evaluate(x)), sq);
  }
  // [x, phi_2(x)] = 0 as polynomials in 8 variables
  for (const auto& p : bracket_with_identity(entry.algebra, gens[1])) EXPECT_TRUE(p.is_zero());
}

TEST(LgGenerators, NonEquivariantMapDetected) {
  const auto L = build_catalog_algebra("sl2");
  EquivariantMap bad{"e-projection", std::vector<Polynomial>(3, Polynomial(3)), 1};
  bad.components[0] = Polynomial::variable(3, 0);
  EXPECT_FALSE(is_equivariant(L, bad));
}

TEST(LgGenerators, UnsupportedAlgebra) {
  auto L = build_catalog_algebra("sl2");
  L.name = "mystery";
  EXPECT_THROW(lg_generators(L), UnsupportedAlgebra);
  auto P = permute_basis(build_catalog_algebra("sl3"), {1, 0, 2, 3, 4, 5, 6, 7});
  EXPECT_THROW(lg_generators(P), UnsupportedAlgebra);
}

TEST(LgGenerators, PointwiseFreeOfRankRank) {
  for (const auto& name : catalog_names()) {
    const auto entry = catalog_entry(name);
    const auto& L = entry.algebra;
    const auto gens = lg_generators(L);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto x = sample_regular_semisimple_pair(L, entry.realization.toral, s).x;
      std::vector<QVector> values;
      for (const auto& g : gens) values.push_back(g.evaluate(x));
      EXPECT_EQ(rank(QMatrix::from_columns(values, L.dim)), L.rank) << name;
      const auto ad = ad_matrix(L, x);
      for (const auto& v : values) EXPECT_TRUE(is_zero(ad * v)) << name;
    }
  }
}

TEST(CanonicalCycle, Sl2Identity) {
  const auto L = build_catalog_algebra("sl2");
  const auto c = canonical_cycle(L, {0});
  EXPECT_EQ(c.degree(), 1u);
  EXPECT_EQ(c.bidegrees(), (Bidegrees{{2, 1}}));
  ASSERT_EQ(c.terms().size(), 3u);
  for (const auto& [b, v] : c.terms()) {
    EXPECT_EQ(v, 1);
    EXPECT_EQ(b.alpha[b.wedge[0]], 1u);
    EXPECT_EQ(degree(b.beta), 0u);
  }
}

TEST(CanonicalCycle, Sl3Bidegree) {
  const auto c = canonical_cycle(build_catalog_algebra("sl3"), {0, 1});
  EXPECT_EQ(c.degree(), 2u);
  EXPECT_EQ(c.bidegrees(), (Bidegrees{{5, 2}}));
  for (const auto& [b, v] : c.terms()) EXPECT_EQ(degree(b.beta), 0u);
}

TEST(CanonicalCycle, Abelian2Wedge) {
  const auto c = canonical_cycle(build_catalog_algebra("abelian2"), {0, 1});
  EXPECT_EQ(c.bidegrees(), (Bidegrees{{2, 2}}));
  ASSERT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c.terms().begin()->first.wedge, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(c.terms().begin()->second, 1);
  // reversed order flips the sign
  const auto r = canonical_cycle(build_catalog_algebra("abelian2"), {1, 0});
  EXPECT_EQ(r.terms().begin()->second, -1);
}

TEST(CanonicalCycle, WedgeMatchesDeterminant) {
  // the Lambda^2 coordinate (a,b) of phi1 ^ phi2 at x is phi1_a phi2_b - phi1_b phi2_a
  const auto L = build_catalog_algebra("sl3");
  const auto gens = lg_generators(L);
  const auto c = canonical_cycle(L, {0, 1});
  Rng rng(12);
  const auto x = rng.integer_vector(8);
  const auto v = evaluate(c, {x, QVector(8, Rational(0))});
  const auto u = gens[0].evaluate(x), w = gens[1].evaluate(x);
  std::size_t idx = 0;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) EXPECT_EQ(v[idx++], u[a] * w[b] - u[b] * w[a]);
}

TEST(CanonicalCycle, BadSubsets) {
  const auto L = build_catalog_algebra("sl3");
  EXPECT_THROW(canonical_cycle(L, {}), std::invalid_argument);
  EXPECT_THROW(canonical_cycle(L, {0, 0}), std::invalid_argument);
  EXPECT_THROW(canonical_cycle(L, {2}), std::invalid_argument);
}

TEST(VerifyCycle, Examples) {
  const auto sl2 = build_catalog_algebra("sl2");
  EXPECT_TRUE(verify_cycle(sl2, canonical_cycle(sl2, {0})));
  const auto sl3 = build_catalog_algebra("sl3");
  EXPECT_TRUE(verify_cycle(sl3, canonical_cycle(sl3, {0, 1})));
  EXPECT_TRUE(verify_cycle(sl3, canonical_cycle(sl3, {1})));
  for (std::uint32_t k = 0; k < 3; ++k) EXPECT_FALSE(verify_cycle(sl2, generator(3, k)));
}

TEST(VerifyCycle, AllCatalogWedges) {
  for (const auto& name : catalog_names()) {
    const auto L = build_catalog_algebra(name);
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < L.rank; ++k) {
      subset.push_back(k);
      EXPECT_TRUE(verify_cycle(L, canonical_cycle(L, subset))) << name << " " << k;
    }
  }
}

TEST(CertifyNonboundary, Sl2) {
  const auto L = build_catalog_algebra("sl2");
  const auto cert = certify_nonboundary(L, canonical_cycle(L, {0}), {{}, {1}, 0, 20});
  EXPECT_EQ(cert.p, 2);
  EXPECT_EQ(cert.q, 1);
  EXPECT_FALSE(cert.in_span);
  EXPECT_TRUE(cert.evaluation_found);
  ASSERT_TRUE(cert.witness);
  EXPECT_TRUE(commutes(L, *cert.witness));
  EXPECT_EQ(cert.value, cert.witness->x);  // psi(x, y) = x
  EXPECT_TRUE(cert.both());
}

TEST(CertifyNonboundary, Sl2AtHH) {
  const auto L = build_catalog_algebra("sl2");
  const auto h = unit_vector(3, 1);
  EXPECT_EQ(evaluate(canonical_cycle(L, {0}), {h, h}), h);
  EXPECT_TRUE(commutes(L, {h, h}));
}

TEST(CertifyNonboundary, Sl3BothCertificates) {
  const auto L = build_catalog_algebra("sl3");
  const auto cert = certify_nonboundary(L, canonical_cycle(L, {0, 1}), {{}, toral_directions(L), 1, 20});
  EXPECT_TRUE(cert.both());
  EXPECT_EQ(cert.degree, 2u);
}

TEST(CertifyNonboundary, BoundaryIsRejected) {
  const auto L = build_catalog_algebra("sl2");
  Rng rng(44);
  for (int s = 0; s < 5; ++s) {
    // d of a random element in degree 2, bidegree (3,3)
    ComplexElement b(3, 2);
    const ComponentBasis basis(3, 2, 3, 3);
    for (int t = 0; t < 3; ++t) b.add(basis.unrank_index(rng.index(basis.size())), Rational(rng.uniform(1, 5)));
    const auto boundary = apply_differential(L, b);
    if (boundary.is_zero()) continue;
    const auto cert = certify_nonboundary(L, boundary, {{}, {1}, 0, 3});
    EXPECT_TRUE(cert.in_span);
    EXPECT_FALSE(cert.evaluation_found);
    EXPECT_FALSE(cert.nonboundary());
  }
}

TEST(CertifyNonboundary, RejectsNonCycle) {
  const auto L = build_catalog_algebra("sl2");
  EXPECT_THROW(certify_nonboundary(L, generator(3, 0)), std::invalid_argument);
}

TEST(CertifyNonboundary, GridFallbackWithoutToral) {
  const auto L = build_catalog_algebra("gl2");
  const auto cert = certify_nonboundary(L, canonical_cycle(L, {0, 1}), {{}, {}, 0, 0});
  EXPECT_TRUE(cert.evaluation_found);
  EXPECT_TRUE(commutes(L, *cert.witness));
}

TEST(CertifyNonboundary, EveryCatalogAlgebraEveryDegree) {
  for (const auto& name : catalog_names()) {
    const auto L = build_catalog_algebra(name);
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < L.rank; ++k) {
      subset.push_back(k);
      const auto cert = certify_nonboundary(L, canonical_cycle(L, subset), {{}, toral_directions(L), 0, 20});
      EXPECT_TRUE(cert.both()) << name << " degree " << k + 1;
      // the two certificates agree
      EXPECT_EQ(cert.nonboundary(), cert.evaluation_found) << name;
    }
  }
}

TEST(CertifyNonboundary, ValueLiesInWedgeOfCentralizer) {
  // at a regular x, psi(x, y) lies in Lambda^i(ker ad x); for i = rank = dim ker
  // this is the line spanned by the wedge of a kernel basis
  const auto entry = catalog_entry("sl3");
  const auto& L = entry.algebra;
  const auto c = canonical_cycle(L, {0, 1});
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto pt = sample_regular_semisimple_pair(L, entry.realization.toral, s);
    const auto v = evaluate(c, pt);
    const auto ker = kernel_basis(ad_matrix(L, pt.x));
    ASSERT_EQ(ker.size(), 2u);
    QVector w;
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = a + 1; b < 8; ++b) w.push_back(ker[0][a] * ker[1][b] - ker[0][b] * ker[1][a]);
    EXPECT_EQ(rank(QMatrix::from_columns({v, w}, w.size())), 1u);
  }
}
