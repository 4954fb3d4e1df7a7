#pragma once

#include <cancx/catalog.hpp>
#include <cancx/dense.hpp>
#include <cancx/differential.hpp>
#include <cancx/evaluation.hpp>
#include <cancx/homology.hpp>
#include <cancx/polynomial.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cancx {

// Linear automorphism x -> A x of g, acting diagonally on g x g.
struct AlgebraAutomorphism {
  QMatrix matrix;
  QMatrix inverse;
  bool preserves_form = false;
};

/// Why A is not a Lie automorphism of L, or nullopt if it is one.
inline std::optional<std::string> automorphism_defect(const LieAlgebra& L, const QMatrix& A) {
  if (A.rows() != L.dim || A.cols() != L.dim) return "size mismatch";
  if (determinant(A) == 0) return "not invertible";
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = a + 1; b < L.dim; ++b) {
      const auto ea = unit_vector(L.dim, a), eb = unit_vector(L.dim, b);
      if (A * bracket(L, ea, eb) != bracket(L, A * ea, A * eb)) {
        return "A[e_" + std::to_string(a) + ",e_" + std::to_string(b) + "] != [A e_a, A e_b]";
      }
    }
  return std::nullopt;
}

inline AlgebraAutomorphism make_automorphism(const LieAlgebra& L, const QMatrix& A) {
  if (auto defect = automorphism_defect(L, A)) throw std::invalid_argument("not a Lie automorphism: " + *defect);
  return {A, *cancx::inverse(A), A.transpose() * L.form * A == L.form};
}

/// exp(ad n) = sum_k (ad n)^k / k!, a finite sum for nilpotent ad n.
inline AlgebraAutomorphism exp_ad_nilpotent(const LieAlgebra& L, const QVector& n) {
  const auto ad = ad_matrix(L, n);
  QMatrix power = QMatrix::identity(L.dim);
  QMatrix sum = QMatrix::identity(L.dim);
  Rational factorial = 1;
  for (std::size_t k = 1; k <= L.dim; ++k) {
    power = power * ad;
    if (power.is_zero()) break;
    if (k == L.dim) throw std::domain_error("exp_ad_nilpotent: ad n is not nilpotent");
    factorial *= static_cast<long>(k);
    sum = sum + (1 / factorial) * power;
  }
  auto aut = make_automorphism(L, sum);
  if (!aut.preserves_form) throw std::logic_error("exp(ad n) does not preserve the invariant form");
  return aut;
}

/// phi -> phi o pi on coefficients: x -> A x, y -> A y. The exterior part is untouched.
inline ComplexElement pullback(const QMatrix& A, const ComplexElement& c) {
  if (A.rows() != c.dim() || A.cols() != c.dim()) throw std::invalid_argument("pullback: size mismatch");
  ComplexElement out(c.dim(), c.degree());
  for (const auto& [b, coeff] : c.terms()) {
    const auto px = substitute_monomial(b.alpha, A);
    const auto py = substitute_monomial(b.beta, A);
    for (const auto& [ex, cx] : px.terms())
      for (const auto& [ey, cy] : py.terms()) out.add(BasisIndex{ex, ey, b.wedge}, coeff * cx * cy);
  }
  return out;
}

inline ComplexElement pullback(const AlgebraAutomorphism& A, const ComplexElement& c) { return pullback(A.matrix, c); }

/// d_pi(c) == pi#(d((pi#)^{-1} c)) on random chains with p+q <= 5, where
/// d_pi is assembled from lambda_pi(v)(x,y) = <v,[Ax,Ay]> directly.
inline bool conjugation_check(const LieAlgebra& L, const AlgebraAutomorphism& A, std::size_t samples,
                              std::uint64_t seed) {
  const auto table = lambda_table(L);
  const auto table_pi = lambda_table(L, A.matrix);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto c = random_chain(L.dim, rng, 5);
    const auto direct = apply_differential(table_pi, c);
    const auto conjugated = pullback(A.matrix, apply_differential(table, pullback(A.inverse, c)));
    if (!(direct == conjugated)) return false;
  }
  return true;
}

/// Homology tables of d and d_pi agree entry by entry for p+q <= cutoff.
inline bool conjugated_homology_check(const LieAlgebra& L, const AlgebraAutomorphism& A, std::int64_t cutoff,
                                      const HomologyOptions& opts = {}) {
  auto quiet = opts;
  quiet.record_timing = false;
  const auto plain = homology_report(L.name, lambda_table(L), cutoff, quiet);
  const auto twisted = homology_report(L.name, lambda_table(L, A.matrix), cutoff, quiet);
  for (std::size_t k = 0; k < plain.blocks.size(); ++k) {
    const auto &a = plain.blocks[k].table, &b = twisted.blocks[k].table;
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t].n != b[t].n || a[t].r != b[t].r || a[t].h != b[t].h) return false;
  }
  return true;
}

/// The degree-(1,1) slice of I_{lambda_pi} equals pi# of the slice of I_lambda:
/// span{lambda_pi(e_k)} = span{pi# lambda(e_j)}, compared through ranks.
inline bool ideal_transport_check(const LieAlgebra& L, const AlgebraAutomorphism& A) {
  const auto table = lambda_table(L);
  const auto twisted = assemble_block(lambda_table(L, A.matrix), 1, 1, 1);
  const ComponentBasis target(L.dim, 0, 1, 1);
  std::vector<MatrixEntry> entries;
  for (std::size_t j = 0; j < L.dim; ++j) {
    ComplexElement gen(L.dim, 1);
    gen.add(BasisIndex{Exponents(L.dim, 0), Exponents(L.dim, 0), {static_cast<std::uint32_t>(j)}}, 1);
    for (const auto& [row, v] : to_coefficients(pullback(A.matrix, apply_differential(table, gen)), target))
      entries.push_back({row, j, v});
  }
  const SparseMatrix pulled(static_cast<std::size_t>(target.size()), L.dim, std::move(entries));
  const auto r_twisted = rank(twisted).value;
  return r_twisted == rank(pulled).value && r_twisted == rank(twisted.hcat(pulled)).value;
}

/// Nilpotent elements for exp(ad n): random integer combinations of the
/// strictly upper (even k) or strictly lower (odd k) triangular basis
/// elements of the catalog realization. Abelian algebras yield n = 0.
inline std::vector<QVector> nilpotent_directions(const LieAlgebra& L, std::size_t count, std::uint64_t seed) {
  const auto entry = catalog_entry(L.name);
  const auto& R = entry.realization;
  std::vector<std::size_t> upper, lower;
  for (std::size_t a = 0; a < R.basis.size(); ++a) {
    if (R.strictly_upper(a)) upper.push_back(a);
    if (R.strictly_lower(a)) lower.push_back(a);
  }
  Rng rng(seed);
  std::vector<QVector> out;
  for (std::size_t k = 0; k < count; ++k) {
    QVector n(L.dim, Rational(0));
    for (auto a : (k % 2 == 0 ? upper : lower)) {
      long c = 0;
      while (c == 0) c = static_cast<long>(rng.uniform(-3, 3));
      n[a] = c;
    }
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace cancx
