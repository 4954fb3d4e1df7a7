#pragma once

#include <cancx/dense.hpp>
#include <cancx/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cancx {

// A finite-dimensional Lie algebra given by structure constants in a fixed
// basis e_0..e_{dim-1}, with a symmetric invariant form. Immutable once built.
struct LieAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<Rational> constants;  // c[a][b][k], flattened: [e_a,e_b] = sum_k c[a][b][k] e_k
  QMatrix form;                     // B[a][b] = <e_a, e_b>
  std::size_t rank = 0;
  std::size_t center_dim = 0;

  LieAlgebra() = default;
  LieAlgebra(std::string n, std::size_t d)
      : name(std::move(n)), dim(d), constants(d * d * d, Rational(0)), form(d, d) {}

  Rational& structure(std::size_t a, std::size_t b, std::size_t k) { return constants[(a * dim + b) * dim + k]; }
  const Rational& structure(std::size_t a, std::size_t b, std::size_t k) const {
    return constants[(a * dim + b) * dim + k];
  }
};

inline QVector bracket(const LieAlgebra& L, const QVector& x, const QVector& y) {
  if (x.size() != L.dim || y.size() != L.dim) {
    throw std::invalid_argument("bracket: vector length differs from algebra dimension");
  }
  QVector out(L.dim, Rational(0));
  for (std::size_t a = 0; a < L.dim; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < L.dim; ++b) {
      if (y[b] == 0) continue;
      const Rational xy = x[a] * y[b];
      for (std::size_t k = 0; k < L.dim; ++k) {
        const auto& c = L.structure(a, b, k);
        if (c != 0) out[k] += c * xy;
      }
    }
  }
  return out;
}

/// Matrix of ad x: column b holds the coordinates of [x, e_b].
inline QMatrix ad_matrix(const LieAlgebra& L, const QVector& x) {
  if (x.size() != L.dim) throw std::invalid_argument("ad_matrix: vector length mismatch");
  QMatrix m(L.dim, L.dim);
  for (std::size_t a = 0; a < L.dim; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < L.dim; ++b)
      for (std::size_t k = 0; k < L.dim; ++k) {
        const auto& c = L.structure(a, b, k);
        if (c != 0) m(k, b) += x[a] * c;
      }
  }
  return m;
}

inline QMatrix killing_form(const LieAlgebra& L) {
  std::vector<QMatrix> ads;
  ads.reserve(L.dim);
  for (std::size_t a = 0; a < L.dim; ++a) ads.push_back(ad_matrix(L, unit_vector(L.dim, a)));
  QMatrix K(L.dim, L.dim);
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = a; b < L.dim; ++b) {
      K(a, b) = (ads[a] * ads[b]).trace();
      K(b, a) = K(a, b);
    }
  return K;
}

inline Rational pairing(const LieAlgebra& L, const QVector& x, const QVector& y) {
  Rational s = 0;
  for (std::size_t a = 0; a < L.dim; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < L.dim; ++b)
      if (y[b] != 0 && L.form(a, b) != 0) s += x[a] * L.form(a, b) * y[b];
  }
  return s;
}

/// Minimum over sampled integer points (entries in [-10,10]) of dim ker(ad x).
inline std::size_t rank_estimate(const LieAlgebra& L, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("rank_estimate: samples must be >= 1");
  Rng rng(seed);
  std::size_t best = L.dim;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = rng.integer_vector(L.dim);
    best = std::min(best, L.dim - cancx::rank(ad_matrix(L, x)));
  }
  return best;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }

  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.name + ": " + c.detail);
    return out;
  }
};

namespace detail {

inline std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

// Basis of span{[e_a, e_b]} as the pivot rows of the bracket image.
inline std::vector<QVector> derived_basis(const LieAlgebra& L) {
  std::vector<QVector> images;
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = a + 1; b < L.dim; ++b) {
      auto v = bracket(L, unit_vector(L.dim, a), unit_vector(L.dim, b));
      if (!is_zero(v)) images.push_back(std::move(v));
    }
  if (images.empty()) return {};
  const auto ech = row_reduce(QMatrix::from_columns(images, L.dim).transpose());
  std::vector<QVector> basis;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    QVector v(L.dim);
    for (std::size_t c = 0; c < L.dim; ++c) v[c] = ech.reduced(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Checks every standing hypothesis exactly. Never throws on a bad algebra;
/// violations are reported per check.
inline ValidationReport validate_algebra(const LieAlgebra& L, std::size_t rank_samples = 20, std::uint64_t seed = 0) {
  ValidationReport report;
  const std::size_t n = L.dim;
  if (n == 0 || L.constants.size() != n * n * n || L.form.rows() != n || L.form.cols() != n) {
    report.checks.push_back({"shape", false, "dimension does not match constants/form sizes"});
    return report;
  }
  report.checks.push_back({"shape", true, ""});

  {
    CheckResult c{"antisymmetry", true, ""};
    for (std::size_t a = 0; a < n && c.passed; ++a)
      for (std::size_t b = 0; b < n && c.passed; ++b)
        for (std::size_t k = 0; k < n; ++k)
          if (L.structure(a, b, k) != -L.structure(b, a, k)) {
            c.passed = false;
            c.detail = "c[a][b][k] != -c[b][a][k] at " + detail::triple(a, b, k);
            break;
          }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"jacobi", true, ""};
    for (std::size_t a = 0; a < n && c.passed; ++a)
      for (std::size_t b = a; b < n && c.passed; ++b)
        for (std::size_t d = b; d < n; ++d) {
          const auto x = unit_vector(n, a), y = unit_vector(n, b), z = unit_vector(n, d);
          QVector s = bracket(L, x, bracket(L, y, z));
          const auto t1 = bracket(L, y, bracket(L, z, x));
          const auto t2 = bracket(L, z, bracket(L, x, y));
          for (std::size_t k = 0; k < n; ++k) s[k] += t1[k] + t2[k];
          if (!is_zero(s)) {
            c.passed = false;
            c.detail = "cyclic sum nonzero on " + detail::triple(a, b, d);
            break;
          }
        }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"form_symmetric", true, ""};
    for (std::size_t a = 0; a < n && c.passed; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (L.form(a, b) != L.form(b, a)) {
          c.passed = false;
          c.detail = "B not symmetric";
          break;
        }
    report.checks.push_back(c);
  }

  report.checks.push_back({"form_nondegenerate", determinant(L.form) != 0, "det B = 0"});
  if (report.checks.back().passed) report.checks.back().detail.clear();

  {
    // <[x,y],z> + <y,[x,z]> = 0
    CheckResult c{"form_invariant", true, ""};
    for (std::size_t a = 0; a < n && c.passed; ++a)
      for (std::size_t b = 0; b < n && c.passed; ++b)
        for (std::size_t d = 0; d < n; ++d) {
          const auto x = unit_vector(n, a), y = unit_vector(n, b), z = unit_vector(n, d);
          if (pairing(L, bracket(L, x, y), z) + pairing(L, y, bracket(L, x, z)) != 0) {
            c.passed = false;
            c.detail = "invariance fails on " + detail::triple(a, b, d);
            break;
          }
        }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"extends_killing", true, ""};
    const auto K = killing_form(L);
    const auto derived = detail::derived_basis(L);
    for (std::size_t u = 0; u < derived.size() && c.passed; ++u)
      for (std::size_t v = u; v < derived.size(); ++v) {
        Rational kuv = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) kuv += derived[u][a] * K(a, b) * derived[v][b];
        if (pairing(L, derived[u], derived[v]) != kuv) {
          c.passed = false;
          c.detail = "B differs from the Killing form on the derived algebra";
          break;
        }
      }
    report.checks.push_back(c);
  }

  {
    QMatrix stacked(n * n, n);  // rows: coordinates of [e_b, x] for every b
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < n; ++k) stacked(b * n + k, a) = L.structure(a, b, k);
    const std::size_t center = n - cancx::rank(stacked);
    CheckResult c{"center_dim", center == L.center_dim, ""};
    if (!c.passed) c.detail = "computed center dimension " + std::to_string(center);
    report.checks.push_back(c);
  }

  {
    const auto est = rank_estimate(L, rank_samples, seed);
    CheckResult c{"rank", est == L.rank, ""};
    if (!c.passed) c.detail = "sampled rank " + std::to_string(est) + " != stored " + std::to_string(L.rank);
    report.checks.push_back(c);
  }
  return report;
}

/// Copy of L with the basis relabelled: new basis vector j is old e_{perm[j]}.
inline LieAlgebra permute_basis(const LieAlgebra& L, const std::vector<std::size_t>& perm) {
  if (perm.size() != L.dim) throw std::invalid_argument("permutation length mismatch");
  std::vector<std::size_t> inv(L.dim, L.dim);
  for (std::size_t j = 0; j < L.dim; ++j) {
    if (perm[j] >= L.dim || inv[perm[j]] != L.dim) throw std::invalid_argument("not a permutation");
    inv[perm[j]] = j;
  }
  LieAlgebra out(L.name, L.dim);
  out.rank = L.rank;
  out.center_dim = L.center_dim;
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = 0; b < L.dim; ++b) {
      out.form(a, b) = L.form(perm[a], perm[b]);
      for (std::size_t k = 0; k < L.dim; ++k) out.structure(a, b, inv[k]) = L.structure(perm[a], perm[b], k);
    }
  return out;
}

inline LieAlgebra scale_form(const LieAlgebra& L, const Rational& factor) {
  if (factor == 0) throw std::invalid_argument("form scale must be nonzero");
  LieAlgebra out = L;
  out.form = factor * L.form;
  return out;
}

}  // namespace cancx
