#pragma once

#include <cancx/dense.hpp>
#include <cancx/graded_basis.hpp>
#include <cancx/rational.hpp>

#include <map>
#include <optional>
#include <stdexcept>

namespace cancx {

// Sparse polynomial with rational coefficients in a fixed number of variables.
class Polynomial {
 public:
  explicit Polynomial(std::size_t vars = 0) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const Rational& c) {
    Polynomial p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t vars, std::size_t k) {
    Exponents e(vars, 0);
    e.at(k) = 1;
    Polynomial p(vars);
    p.add_term(e, 1);
    return p;
  }

  /// sum_k coeffs[k] x_k
  static Polynomial linear(const QVector& coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) p += coeffs[k] * variable(coeffs.size(), k);
    return p;
  }

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_) throw std::invalid_argument("Polynomial: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Common degree of all terms, or nullopt if inhomogeneous or zero.
  std::optional<std::uint32_t> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto d = degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (degree(e) != d) return std::nullopt;
    return d;
  }

  Rational evaluate(const QVector& x) const {
    if (x.size() != vars_) throw std::invalid_argument("Polynomial::evaluate: point length mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t k = 0; k < vars_ && term != 0; ++k)
        for (std::uint32_t t = 0; t < e[k]; ++t) term *= x[k];
      total += term;
    }
    return total;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Rational& s, Polynomial p) {
    if (s == 0) p.terms_.clear();
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.vars_);
    Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < a.vars_; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.vars_ != vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

/// Product of (sum_c A[a][c] x_c)^{e_a} over a: the monomial x^e after x -> A x.
inline Polynomial substitute_monomial(const Exponents& e, const QMatrix& A) {
  const std::size_t n = e.size();
  Polynomial out = Polynomial::constant(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    if (e[a] == 0) continue;
    QVector row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = A(a, c);
    const auto lin = Polynomial::linear(row);
    for (std::uint32_t t = 0; t < e[a]; ++t) out = out * lin;
  }
  return out;
}

inline Polynomial substitute(const Polynomial& p, const QMatrix& A) {
  Polynomial out(p.vars());
  for (const auto& [e, c] : p.terms()) out += c * substitute_monomial(e, A);
  return out;
}

}  // namespace cancx
