#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cancx {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return r;
}

/// Number of monomials of degree a in dim variables; 0 for negative a.
inline std::uint64_t sym_dimension(std::size_t dim, std::int64_t a) {
  if (dim == 0) throw std::invalid_argument("sym_dimension: dim must be >= 1");
  if (a < 0) return 0;
  return binomial(a + static_cast<std::int64_t>(dim) - 1, static_cast<std::int64_t>(dim) - 1);
}

inline std::uint32_t degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

// Basis element x^alpha y^beta (x) e_J of S(g) (x) S(g) (x) Lambda(g).
struct BasisIndex {
  Exponents alpha;
  Exponents beta;
  std::vector<std::uint32_t> wedge;  // strictly increasing

  auto operator<=>(const BasisIndex&) const = default;
};

/// Canonical order of a component: alpha then beta with larger exponents of
/// earlier variables first (x_0^d leads), then J lexicographically.
inline bool canonical_less(const BasisIndex& a, const BasisIndex& b) {
  if (a.alpha != b.alpha) return a.alpha > b.alpha;
  if (a.beta != b.beta) return a.beta > b.beta;
  return a.wedge < b.wedge;
}

namespace detail {

// Rank of a degree-d exponent vector among all of them in canonical order.
// Skipping exponent values above alpha_k at position k counts sym(n-k, rem-alpha_k-1)
// monomials (hockey-stick identity).
inline std::uint64_t monomial_rank(const Exponents& alpha) {
  const std::size_t n = alpha.size();
  std::int64_t rem = degree(alpha);
  std::uint64_t r = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    r += sym_dimension(n - k, rem - static_cast<std::int64_t>(alpha[k]) - 1);
    rem -= alpha[k];
  }
  return r;
}

inline Exponents monomial_unrank(std::size_t n, std::uint32_t d, std::uint64_t r) {
  Exponents alpha(n, 0);
  std::int64_t rem = d;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // largest exponent e with sym(n-k, rem-e-1) <= r
    std::int64_t e = rem;
    while (sym_dimension(n - k, rem - e) <= r) --e;
    alpha[k] = static_cast<std::uint32_t>(e);
    r -= sym_dimension(n - k, rem - e - 1);
    rem -= e;
  }
  alpha[n - 1] = static_cast<std::uint32_t>(rem);
  return alpha;
}

inline std::uint64_t subset_rank(const std::vector<std::uint32_t>& J, std::size_t n) {
  const std::int64_t size = static_cast<std::int64_t>(J.size());
  std::uint64_t r = 0;
  std::int64_t prev = -1;
  for (std::int64_t t = 0; t < size; ++t) {
    for (std::int64_t v = prev + 1; v < static_cast<std::int64_t>(J[t]); ++v)
      r += binomial(static_cast<std::int64_t>(n) - 1 - v, size - 1 - t);
    prev = J[t];
  }
  return r;
}

inline std::vector<std::uint32_t> subset_unrank(std::size_t n, std::size_t size, std::uint64_t r) {
  std::vector<std::uint32_t> J;
  std::int64_t v = 0;
  for (std::size_t t = 0; t < size; ++t) {
    for (;; ++v) {
      const auto block = binomial(static_cast<std::int64_t>(n) - 1 - v, static_cast<std::int64_t>(size - 1 - t));
      if (r < block) break;
      r -= block;
    }
    J.push_back(static_cast<std::uint32_t>(v++));
  }
  return J;
}

}  // namespace detail

// The component S^{p-i}(g) (x) S^{q-i}(g) (x) Lambda^i(g) of C_i in bidegree (p,q).
// Exterior generators carry bidegree (1,1), so d preserves (p,q).
class ComponentBasis {
 public:
  ComponentBasis(std::size_t dim, std::int64_t i, std::int64_t p, std::int64_t q) : dim_(dim), i_(i), p_(p), q_(q) {
    if (dim == 0) throw std::invalid_argument("ComponentBasis: dim must be >= 1");
    if (i < 0 || p < i || q < i || static_cast<std::size_t>(i) > dim) {
      left_ = right_ = wedge_ = 0;
    } else {
      left_ = sym_dimension(dim, p - i);
      right_ = sym_dimension(dim, q - i);
      wedge_ = binomial(static_cast<std::int64_t>(dim), i);
    }
  }

  std::size_t dim() const { return dim_; }
  std::int64_t degree() const { return i_; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::uint64_t size() const { return left_ * right_ * wedge_; }
  bool empty() const { return size() == 0; }

  bool contains(const BasisIndex& b) const {
    if (empty() || b.alpha.size() != dim_ || b.beta.size() != dim_) return false;
    if (b.wedge.size() != static_cast<std::size_t>(i_)) return false;
    if (degree_of(b.alpha) != p_ - i_ || degree_of(b.beta) != q_ - i_) return false;
    for (std::size_t t = 0; t < b.wedge.size(); ++t) {
      if (b.wedge[t] >= dim_) return false;
      if (t > 0 && b.wedge[t] <= b.wedge[t - 1]) return false;
    }
    return true;
  }

  std::uint64_t rank_index(const BasisIndex& b) const {
    if (!contains(b)) throw std::out_of_range("rank_index: element not in component");
    return (detail::monomial_rank(b.alpha) * right_ + detail::monomial_rank(b.beta)) * wedge_ +
           detail::subset_rank(b.wedge, dim_);
  }

  BasisIndex unrank_index(std::uint64_t n) const {
    if (n >= size()) throw std::out_of_range("unrank_index: index beyond component dimension");
    BasisIndex b;
    const auto w = n % wedge_;
    n /= wedge_;
    const auto r = n % right_;
    const auto l = n / right_;
    b.alpha = detail::monomial_unrank(dim_, static_cast<std::uint32_t>(p_ - i_), l);
    b.beta = detail::monomial_unrank(dim_, static_cast<std::uint32_t>(q_ - i_), r);
    b.wedge = detail::subset_unrank(dim_, static_cast<std::size_t>(i_), w);
    return b;
  }

  /// All basis elements in canonical order.
  std::vector<BasisIndex> elements() const {
    std::vector<BasisIndex> out;
    out.reserve(size());
    for (std::uint64_t n = 0; n < size(); ++n) out.push_back(unrank_index(n));
    return out;
  }

 private:
  static std::int64_t degree_of(const Exponents& e) { return static_cast<std::int64_t>(cancx::degree(e)); }

  std::size_t dim_;
  std::int64_t i_, p_, q_;
  std::uint64_t left_ = 0, right_ = 0, wedge_ = 0;
};

inline ComponentBasis component_basis(std::size_t dim, std::int64_t i, std::int64_t p, std::int64_t q) {
  return ComponentBasis(dim, i, p, q);
}

}  // namespace cancx
