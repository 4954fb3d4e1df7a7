#pragma once

#include <cancx/dense.hpp>
#include <cancx/lie_algebra.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cancx {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Faithful matrix realization of a catalog algebra. Basis element a is the
// matrix basis[a]; toral lists basis elements spanning a diagonal Cartan
// subalgebra, center a basis of the center.
struct MatrixRealization {
  std::size_t size = 0;
  std::vector<QMatrix> basis;
  std::vector<std::size_t> toral;
  std::vector<std::size_t> center;

  QMatrix element(const QVector& x) const {
    QMatrix m(size, size);
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (x.at(a) != 0) m = m + x[a] * basis[a];
    return m;
  }

  /// Coordinates of m in the basis, or nullopt if m is not in the span.
  std::optional<QVector> coordinates(const QMatrix& m) const {
    QMatrix flat(size * size, basis.size());
    QVector target(size * size);
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) flat(r * size + c, a) = basis[a](r, c);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) target[r * size + c] = m(r, c);
    return solve(flat, target);
  }

  bool strictly_upper(std::size_t a) const {
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c <= r; ++c)
        if (basis[a](r, c) != 0) return false;
    return !basis[a].is_zero();
  }

  bool strictly_lower(std::size_t a) const {
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = r; c < size; ++c)
        if (basis[a](r, c) != 0) return false;
    return !basis[a].is_zero();
  }
};

struct CatalogEntry {
  LieAlgebra algebra;
  MatrixRealization realization;
};

namespace detail {

inline QMatrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  QMatrix m(n, n);
  m(r, c) = 1;
  return m;
}

inline std::string canonical_catalog_name(std::string_view name) {
  const std::string s(name);
  if (s == "abelian(1)") return "abelian1";
  if (s == "abelian(2)") return "abelian2";
  if (s == "abelian(3)") return "abelian3";
  if (s == "abelian(4)") return "abelian4";
  if (s == "sl2×sl2" || s == "sl2+sl2" || s == "sl2_sl2") return "sl2xsl2";
  return s;
}

inline MatrixRealization realization_for(const std::string& name) {
  MatrixRealization R;
  auto E = [&](std::size_t r, std::size_t c) { return unit_matrix(R.size, r, c); };
  if (name.rfind("abelian", 0) == 0 && name.size() == 8 && name[7] >= '1' && name[7] <= '4') {
    R.size = static_cast<std::size_t>(name[7] - '0');
    for (std::size_t a = 0; a < R.size; ++a) {
      R.basis.push_back(E(a, a));
      R.toral.push_back(a);
      R.center.push_back(a);
    }
  } else if (name == "sl2") {
    R.size = 2;
    R.basis = {E(0, 1), E(0, 0) - E(1, 1), E(1, 0)};
    R.toral = {1};
  } else if (name == "gl2") {
    R.size = 2;
    R.basis = {E(0, 1), E(0, 0) - E(1, 1), E(1, 0), QMatrix::identity(2)};
    R.toral = {1, 3};
    R.center = {3};
  } else if (name == "sl3") {
    R.size = 3;
    R.basis = {E(0, 1), E(0, 2), E(1, 2), E(0, 0) - E(1, 1), E(1, 1) - E(2, 2), E(1, 0), E(2, 0), E(2, 1)};
    R.toral = {3, 4};
  } else if (name == "sl2xsl2") {
    R.size = 4;
    R.basis = {E(0, 1), E(0, 0) - E(1, 1), E(1, 0), E(2, 3), E(2, 2) - E(3, 3), E(3, 2)};
    R.toral = {1, 4};
  } else if (name == "so3") {
    // Split form: X with J X antisymmetric, J the antidiagonal unit matrix.
    R.size = 3;
    R.basis = {E(0, 1) - E(1, 2), E(0, 0) - E(2, 2), E(1, 0) - E(2, 1)};
    R.toral = {1};
  } else {
    throw CatalogError("unknown catalog algebra: " + name);
  }
  return R;
}

inline std::size_t catalog_rank(const std::string& name, const MatrixRealization& R) {
  if (name.rfind("abelian", 0) == 0) return R.size;
  if (name == "sl2" || name == "so3") return 1;
  return 2;  // sl3, gl2, sl2xsl2
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  return {"abelian1", "abelian2", "abelian3", "abelian4", "sl2", "sl3", "gl2", "sl2xsl2", "so3"};
}

inline bool is_catalog_name(std::string_view name) {
  const auto canon = detail::canonical_catalog_name(name);
  for (const auto& n : catalog_names())
    if (n == canon) return true;
  return false;
}

/// Builds and validates a catalog algebra. The form is the Killing form plus
/// the identity on the chosen center basis.
inline CatalogEntry catalog_entry(std::string_view requested) {
  const auto name = detail::canonical_catalog_name(requested);
  if (!is_catalog_name(name)) throw CatalogError("unknown catalog algebra: " + std::string(requested));
  CatalogEntry entry;
  entry.realization = detail::realization_for(name);
  const auto& R = entry.realization;
  LieAlgebra L(name, R.basis.size());
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = 0; b < L.dim; ++b) {
      const QMatrix comm = R.basis[a] * R.basis[b] - R.basis[b] * R.basis[a];
      const auto coords = R.coordinates(comm);
      if (!coords) throw CatalogError("realization of " + name + " is not closed under the bracket");
      for (std::size_t k = 0; k < L.dim; ++k) L.structure(a, b, k) = (*coords)[k];
    }
  L.form = killing_form(L);
  for (auto c : R.center) L.form(c, c) += 1;
  L.center_dim = R.center.size();
  L.rank = detail::catalog_rank(name, R);
  const auto report = validate_algebra(L);
  if (!report.ok()) {
    std::string msg = "catalog algebra " + name + " failed validation:";
    for (const auto& v : report.violations()) msg += " " + v + ";";
    throw CatalogError(msg);
  }
  entry.algebra = std::move(L);
  return entry;
}

inline LieAlgebra build_catalog_algebra(std::string_view name) { return catalog_entry(name).algebra; }

}  // namespace cancx
