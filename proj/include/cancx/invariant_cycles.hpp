#pragma once

#include <cancx/catalog.hpp>
#include <cancx/differential.hpp>
#include <cancx/evaluation.hpp>
#include <cancx/exact_linalg.hpp>
#include <cancx/polynomial.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace cancx {

class UnsupportedAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial map phi: g -> g, components[k] the coordinate of e_k as a
// polynomial in the coordinates of x. Homogeneous of the given degree.
struct EquivariantMap {
  std::string label;
  std::vector<Polynomial> components;
  std::uint32_t degree = 0;

  QVector evaluate(const QVector& x) const {
    QVector v(components.size());
    for (std::size_t k = 0; k < components.size(); ++k) v[k] = components[k].evaluate(x);
    return v;
  }
};

/// [x, phi(x)] as dim polynomials in x.
inline std::vector<Polynomial> bracket_with_identity(const LieAlgebra& L, const EquivariantMap& phi) {
  std::vector<Polynomial> out(L.dim, Polynomial(L.dim));
  for (std::size_t a = 0; a < L.dim; ++a) {
    const auto xa = Polynomial::variable(L.dim, a);
    for (std::size_t b = 0; b < L.dim; ++b) {
      if (phi.components[b].is_zero()) continue;
      const auto prod = xa * phi.components[b];
      for (std::size_t k = 0; k < L.dim; ++k)
        if (L.structure(a, b, k) != 0) out[k] += L.structure(a, b, k) * prod;
    }
  }
  return out;
}

inline bool is_equivariant(const LieAlgebra& L, const EquivariantMap& phi) {
  if (phi.components.size() != L.dim) return false;
  for (const auto& p : bracket_with_identity(L, phi))
    if (!p.is_zero()) return false;
  return true;
}

namespace detail {

inline EquivariantMap constant_map(std::size_t dim, std::size_t k) {
  EquivariantMap phi{"e" + std::to_string(k), std::vector<Polynomial>(dim, Polynomial(dim)), 0};
  phi.components[k] = Polynomial::constant(dim, 1);
  return phi;
}

// x -> sum_{k in support} x_k e_k
inline EquivariantMap projection_map(std::size_t dim, const std::vector<std::size_t>& support, std::string label) {
  EquivariantMap phi{std::move(label), std::vector<Polynomial>(dim, Polynomial(dim)), 1};
  for (auto k : support) phi.components[k] = Polynomial::variable(dim, k);
  return phi;
}

// x -> x^2 - tr(x^2)/n Id, computed through the matrix realization.
inline EquivariantMap traceless_square(const MatrixRealization& R) {
  const std::size_t dim = R.basis.size();
  EquivariantMap phi{"traceless_square", std::vector<Polynomial>(dim, Polynomial(dim)), 2};
  const Rational n(static_cast<long>(R.size));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      QMatrix prod = R.basis[a] * R.basis[b];
      prod = prod - (prod.trace() / n) * QMatrix::identity(R.size);
      const auto coords = R.coordinates(prod);
      if (!coords) throw std::logic_error("traceless square leaves the algebra");
      Exponents e(dim, 0);
      ++e[a];
      ++e[b];
      for (std::size_t k = 0; k < dim; ++k)
        if ((*coords)[k] != 0) phi.components[k].add_term(e, (*coords)[k]);
    }
  return phi;
}

}  // namespace detail

/// Closed-form free generators of the module of maps with [x, phi(x)] = 0,
/// one per unit of rank. Throws UnsupportedAlgebra outside the catalog.
inline std::vector<EquivariantMap> lg_generators(const LieAlgebra& L) {
  if (!is_catalog_name(L.name)) throw UnsupportedAlgebra("no invariant vector field generators known for " + L.name);
  const auto entry = catalog_entry(L.name);
  if (entry.algebra.dim != L.dim || entry.algebra.constants != L.constants) {
    throw UnsupportedAlgebra(L.name + " does not match the catalog basis");
  }
  const auto& name = entry.algebra.name;
  const std::size_t dim = L.dim;
  std::vector<std::size_t> all(dim);
  for (std::size_t k = 0; k < dim; ++k) all[k] = k;

  std::vector<EquivariantMap> gens;
  if (name.rfind("abelian", 0) == 0) {
    for (std::size_t k = 0; k < dim; ++k) gens.push_back(detail::constant_map(dim, k));
  } else if (name == "sl2" || name == "so3") {
    gens.push_back(detail::projection_map(dim, all, "identity"));
  } else if (name == "sl3") {
    gens.push_back(detail::projection_map(dim, all, "identity"));
    gens.push_back(detail::traceless_square(entry.realization));
  } else if (name == "gl2") {
    gens.push_back(detail::projection_map(dim, all, "identity"));
    gens.push_back(detail::constant_map(dim, entry.realization.center.at(0)));
  } else if (name == "sl2xsl2") {
    gens.push_back(detail::projection_map(dim, {0, 1, 2}, "first_factor"));
    gens.push_back(detail::projection_map(dim, {3, 4, 5}, "second_factor"));
  } else {
    throw UnsupportedAlgebra("no invariant vector field generators known for " + name);
  }
  for (const auto& g : gens)
    if (!is_equivariant(L, g)) throw std::logic_error("generator " + g.label + " fails [x, phi(x)] = 0");
  return gens;
}

/// psi = phi_{k_1} ^ ... ^ phi_{k_i} as an element with no y-dependence.
inline ComplexElement canonical_cycle(std::size_t dim, const std::vector<EquivariantMap>& gens,
                                      const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("canonical_cycle: empty generator subset");
  for (std::size_t t = 0; t < subset.size(); ++t) {
    if (subset[t] >= gens.size()) throw std::invalid_argument("canonical_cycle: generator index out of range");
    for (std::size_t s = 0; s < t; ++s)
      if (subset[s] == subset[t]) throw std::invalid_argument("canonical_cycle: repeated generator");
  }
  // exterior monomial (increasing indices) -> polynomial coefficient
  std::map<std::vector<std::uint32_t>, Polynomial> wedge{{{}, Polynomial::constant(dim, 1)}};
  for (const auto k : subset) {
    std::map<std::vector<std::uint32_t>, Polynomial> next;
    for (const auto& [J, coeff] : wedge)
      for (std::uint32_t a = 0; a < dim; ++a) {
        const auto& comp = gens[k].components[a];
        if (comp.is_zero() || std::find(J.begin(), J.end(), a) != J.end()) continue;
        // appending e_a then sorting passes it over every larger index
        const auto larger = std::count_if(J.begin(), J.end(), [a](std::uint32_t j) { return j > a; });
        auto J2 = J;
        J2.insert(std::upper_bound(J2.begin(), J2.end(), a), a);
        const Polynomial term = (larger % 2 == 0 ? Rational(1) : Rational(-1)) * (coeff * comp);
        auto [it, inserted] = next.try_emplace(J2, term);
        if (!inserted) it->second += term;
      }
    wedge = std::move(next);
  }
  ComplexElement c(dim, subset.size());
  for (const auto& [J, coeff] : wedge)
    for (const auto& [e, x] : coeff.terms()) c.add(BasisIndex{e, Exponents(dim, 0), J}, x);
  return c;
}

inline ComplexElement canonical_cycle(const LieAlgebra& L, const std::vector<std::size_t>& subset) {
  return canonical_cycle(L.dim, lg_generators(L), subset);
}

inline bool verify_cycle(const LambdaTable& table, const ComplexElement& c) {
  if (c.degree() == 0) throw std::invalid_argument("verify_cycle: exterior degree must be >= 1");
  return apply_differential(table, c).is_zero();
}

inline bool verify_cycle(const LieAlgebra& L, const ComplexElement& c) { return verify_cycle(lambda_table(L), c); }

struct NonboundaryCertificate {
  std::size_t degree = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool in_span = true;                // span test: c in the image of d_{i+1}
  bool evaluation_found = false;      // commuting pair with c(x,y) != 0
  std::optional<PointPair> witness;
  QVector value;                      // c(witness) in Lambda^i coordinates

  bool nonboundary() const { return !in_span; }
  bool both() const { return !in_span && evaluation_found; }
};

struct CertifyOptions {
  RankOptions rank;
  std::vector<std::size_t> toral;  // regular semisimple sampling directions
  std::uint64_t seed = 0;
  std::size_t samples = 20;
};

namespace detail {

inline std::optional<PointPair> find_nonvanishing_pair(const LieAlgebra& L, const ComplexElement& c,
                                                       const CertifyOptions& opts) {
  for (std::size_t s = 0; s < opts.samples; ++s) {
    auto pt = sample_regular_semisimple_pair(L, opts.toral, opts.seed + s);
    if (!is_zero(evaluate(c, pt))) return pt;
  }
  // exhaustive grid x in {-1,0,1}^dim, y in {x} and the centralizer basis
  std::vector<long> digits(L.dim, -1);
  while (true) {
    PointPair pt;
    pt.x.resize(L.dim);
    for (std::size_t k = 0; k < L.dim; ++k) pt.x[k] = digits[k];
    std::vector<QVector> ys{pt.x};
    for (auto& v : kernel_basis(ad_matrix(L, pt.x))) ys.push_back(std::move(v));
    for (auto& y : ys) {
      pt.y = y;
      if (!is_zero(evaluate(c, pt))) return pt;
    }
    std::size_t k = 0;
    while (k < L.dim && digits[k] == 1) digits[k++] = -1;
    if (k == L.dim) break;
    ++digits[k];
  }
  return std::nullopt;
}

}  // namespace detail

/// Two independent non-boundary certificates for a homogeneous cycle: the
/// span test against the block d_{i+1} of its bidegree, and a commuting pair
/// where the cycle does not vanish (boundaries vanish on commuting pairs).
inline NonboundaryCertificate certify_nonboundary(const LieAlgebra& L, const LambdaTable& table,
                                                  const ComplexElement& c, const CertifyOptions& opts = {}) {
  if (c.degree() == 0 || !verify_cycle(table, c)) throw std::invalid_argument("certify_nonboundary: input is not a cycle");
  NonboundaryCertificate cert;
  cert.degree = c.degree();
  if (c.is_zero()) return cert;  // 0 = d(0)
  const auto bidegrees = c.bidegrees();
  if (bidegrees.size() != 1) throw std::invalid_argument("certify_nonboundary: cycle must be bihomogeneous");
  std::tie(cert.p, cert.q) = *bidegrees.begin();
  const auto i = static_cast<std::int64_t>(c.degree());
  const ComponentBasis here(L.dim, i, cert.p, cert.q);
  const auto v = to_coefficients(c, here);
  cert.in_span = in_column_span(assemble_block(table, i + 1, cert.p, cert.q), v, opts.rank);
  if (auto pt = detail::find_nonvanishing_pair(L, c, opts)) {
    cert.evaluation_found = true;
    cert.value = evaluate(c, *pt);
    cert.witness = std::move(pt);
  }
  return cert;
}

inline NonboundaryCertificate certify_nonboundary(const LieAlgebra& L, const ComplexElement& c,
                                                  const CertifyOptions& opts = {}) {
  return certify_nonboundary(L, lambda_table(L), c, opts);
}

/// Toral directions for catalog algebras, empty otherwise.
inline std::vector<std::size_t> toral_directions(const LieAlgebra& L) {
  if (!is_catalog_name(L.name)) return {};
  const auto entry = catalog_entry(L.name);
  if (entry.algebra.constants != L.constants) return {};
  return entry.realization.toral;
}

}  // namespace cancx
