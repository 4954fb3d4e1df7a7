#pragma once

#include <cancx/dense.hpp>
#include <cancx/exact_linalg.hpp>
#include <cancx/graded_basis.hpp>
#include <cancx/lie_algebra.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cancx {

struct LambdaTerm {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  Rational value;
};

// The quadratic functions lambda(e_k)(x,y) = sum_{a,b} m^k[a][b] x_a y_b that
// the differential sends e_k to. For the canonical complex m^k[a][b] = <e_k,[e_a,e_b]>.
struct LambdaTable {
  std::size_t dim = 0;
  std::vector<std::vector<LambdaTerm>> rows;  // rows[k]: nonzero entries of m^k

  Rational at(std::size_t k, std::size_t a, std::size_t b) const {
    for (const auto& t : rows.at(k))
      if (t.a == a && t.b == b) return t.value;
    return 0;
  }

  bool is_zero() const {
    for (const auto& r : rows)
      if (!r.empty()) return false;
    return true;
  }

  static LambdaTable from_dense(std::size_t dim, const std::vector<QMatrix>& m) {
    LambdaTable t{dim, std::vector<std::vector<LambdaTerm>>(dim)};
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
          if (m[k](a, b) != 0)
            t.rows[k].push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), m[k](a, b)});
    return t;
  }

  std::vector<QMatrix> to_dense() const {
    std::vector<QMatrix> m(dim, QMatrix(dim, dim));
    for (std::size_t k = 0; k < dim; ++k)
      for (const auto& t : rows[k]) m[k](t.a, t.b) = t.value;
    return m;
  }
};

inline LambdaTable lambda_table(const LieAlgebra& L) {
  std::vector<QMatrix> m(L.dim, QMatrix(L.dim, L.dim));
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = 0; b < L.dim; ++b)
      for (std::size_t c = 0; c < L.dim; ++c) {
        const auto& s = L.structure(a, b, c);
        if (s == 0) continue;
        for (std::size_t k = 0; k < L.dim; ++k)
          if (L.form(k, c) != 0) m[k](a, b) += s * L.form(k, c);
      }
  return LambdaTable::from_dense(L.dim, m);
}

/// Table of lambda composed with (x,y) -> (Ax, Ay): m^k becomes A^T m^k A.
inline LambdaTable lambda_table(const LieAlgebra& L, const QMatrix& A) {
  if (A.rows() != L.dim || A.cols() != L.dim) throw std::invalid_argument("lambda_table: automorphism size mismatch");
  auto m = lambda_table(L).to_dense();
  const auto At = A.transpose();
  for (auto& mk : m) mk = At * mk * A;
  return LambdaTable::from_dense(L.dim, m);
}

/// Negates a single entry m^k[a][b] (not its antisymmetric partner). A
/// deliberately broken differential for mutation tests.
inline LambdaTable with_sign_corruption(LambdaTable t) {
  for (auto& r : t.rows) {
    if (!r.empty()) {
      r.front().value = -r.front().value;
      break;
    }
  }
  return t;
}

// Element of S(g) (x) S(g) (x) Lambda^degree(g): a finite sum of basis
// elements of possibly several bidegrees.
class ComplexElement {
 public:
  ComplexElement(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<BasisIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BasisIndex& b, const Rational& coefficient) {
    if (b.alpha.size() != dim_ || b.beta.size() != dim_ || b.wedge.size() != degree_) {
      throw std::invalid_argument("ComplexElement: basis element shape mismatch");
    }
    for (std::size_t t = 0; t < b.wedge.size(); ++t)
      if (b.wedge[t] >= dim_ || (t > 0 && b.wedge[t] <= b.wedge[t - 1]))
        throw std::invalid_argument("ComplexElement: exterior indices must be strictly increasing");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// (p, q) of every term present.
  std::set<std::pair<std::int64_t, std::int64_t>> bidegrees() const {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    const auto i = static_cast<std::int64_t>(degree_);
    for (const auto& [b, c] : terms_) out.emplace(cancx::degree(b.alpha) + i, cancx::degree(b.beta) + i);
    return out;
  }

  ComplexElement& operator+=(const ComplexElement& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }

  ComplexElement& operator-=(const ComplexElement& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }

  friend ComplexElement operator*(const Rational& s, ComplexElement e) {
    if (s == 0) e.terms_.clear();
    for (auto& [b, c] : e.terms_) c *= s;
    return e;
  }

  friend bool operator==(const ComplexElement& a, const ComplexElement& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const ComplexElement& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_) throw std::invalid_argument("ComplexElement: incompatible operands");
  }

  std::size_t dim_;
  std::size_t degree_;
  std::map<BasisIndex, Rational> terms_;
};

/// Coefficient vector of c in the given component; throws if c has a term
/// outside it.
inline SparseVector to_coefficients(const ComplexElement& c, const ComponentBasis& basis) {
  SparseVector v;
  for (const auto& [b, x] : c.terms()) v.emplace_back(basis.rank_index(b), x);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

inline ComplexElement from_coefficients(const ComponentBasis& basis, const SparseVector& v) {
  ComplexElement c(basis.dim(), static_cast<std::size_t>(std::max<std::int64_t>(basis.degree(), 0)));
  for (const auto& [n, x] : v) c.add(basis.unrank_index(n), x);
  return c;
}

namespace detail {

// Calls emit(image, coefficient) for every term of d applied to one basis element.
template <class Emit>
void differential_terms(const LambdaTable& table, const BasisIndex& b, Emit&& emit) {
  BasisIndex image;
  for (std::size_t t = 0; t < b.wedge.size(); ++t) {
    const auto j = b.wedge[t];
    const bool negative = (t % 2) == 1;
    image.wedge.clear();
    for (std::size_t s = 0; s < b.wedge.size(); ++s)
      if (s != t) image.wedge.push_back(b.wedge[s]);
    for (const auto& term : table.rows[j]) {
      image.alpha = b.alpha;
      image.beta = b.beta;
      ++image.alpha[term.a];
      ++image.beta[term.b];
      emit(image, negative ? Rational(-term.value) : term.value);
    }
  }
}

}  // namespace detail

/// d(f (x) e_{j_1} ^ ... ^ e_{j_i}) = sum_t (-1)^{t-1} f lambda(e_{j_t}) (x) (wedge without j_t).
inline ComplexElement apply_differential(const LambdaTable& table, const ComplexElement& c) {
  if (c.degree() == 0) throw std::domain_error("apply_differential: degree-0 elements have no boundary");
  if (c.dim() != table.dim) throw std::invalid_argument("apply_differential: dimension mismatch");
  ComplexElement out(c.dim(), c.degree() - 1);
  for (const auto& [b, x] : c.terms())
    detail::differential_terms(table, b, [&](const BasisIndex& img, const Rational& v) { out.add(img, x * v); });
  return out;
}

inline ComplexElement apply_differential(const LieAlgebra& L, const ComplexElement& c) {
  return apply_differential(lambda_table(L), c);
}

/// Matrix of d from component (i,p,q) to (i-1,p,q); rows index the target.
inline SparseMatrix assemble_block(const LambdaTable& table, std::int64_t i, std::int64_t p, std::int64_t q) {
  if (i < 1) throw std::invalid_argument("assemble_block: exterior degree must be >= 1");
  const ComponentBasis src(table.dim, i, p, q);
  const ComponentBasis dst(table.dim, i - 1, p, q);
  std::vector<MatrixEntry> entries;
  for (std::uint64_t n = 0; n < src.size(); ++n) {
    const auto b = src.unrank_index(n);
    detail::differential_terms(table, b, [&](const BasisIndex& img, const Rational& v) {
      entries.push_back({static_cast<std::size_t>(dst.rank_index(img)), static_cast<std::size_t>(n), v});
    });
  }
  return SparseMatrix(static_cast<std::size_t>(dst.size()), static_cast<std::size_t>(src.size()), std::move(entries));
}

inline SparseMatrix assemble_block(const LieAlgebra& L, std::int64_t i, std::int64_t p, std::int64_t q) {
  return assemble_block(lambda_table(L), i, p, q);
}

}  // namespace cancx
