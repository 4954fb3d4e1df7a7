#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cancx {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n" or "n/d" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
  if (r.get_den() == 0) throw std::domain_error("zero denominator");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

inline QVector unit_vector(std::size_t dim, std::size_t k) {
  QVector v(dim, Rational(0));
  v.at(k) = 1;
  return v;
}

// Deterministic integer sampler. Uses raw mt19937_64 output so results do
// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
  }

  QVector integer_vector(std::size_t dim, std::int64_t lo = -10, std::int64_t hi = 10) {
    QVector v(dim);
    for (auto& x : v) x = Rational(static_cast<long>(uniform(lo, hi)));
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cancx
