#pragma once

#include <cancx/lie_algebra.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cancx {

namespace detail {

// Plain JSON numbers when they fit, decimal strings otherwise.
inline nlohmann::json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace detail

// {name, dim, rank, center_dim,
//  structure_constants: [[a,b,k,num,den],...], form: [[a,b,num,den],...]}
// Indices are 0-based; only nonzero entries are written.
inline nlohmann::json algebra_to_json(const LieAlgebra& L) {
  nlohmann::json j;
  j["name"] = L.name;
  j["dim"] = L.dim;
  j["rank"] = L.rank;
  j["center_dim"] = L.center_dim;
  auto constants = nlohmann::json::array();
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = 0; b < L.dim; ++b)
      for (std::size_t k = 0; k < L.dim; ++k) {
        const auto& c = L.structure(a, b, k);
        if (c == 0) continue;
        constants.push_back({a, b, k, detail::integer_to_json(c.get_num()), detail::integer_to_json(c.get_den())});
      }
  j["structure_constants"] = std::move(constants);
  auto form = nlohmann::json::array();
  for (std::size_t a = 0; a < L.dim; ++a)
    for (std::size_t b = 0; b < L.dim; ++b) {
      const auto& v = L.form(a, b);
      if (v == 0) continue;
      form.push_back({a, b, detail::integer_to_json(v.get_num()), detail::integer_to_json(v.get_den())});
    }
  j["form"] = std::move(form);
  return j;
}

namespace detail {

inline Integer json_integer(const nlohmann::json& v) {
  if (v.is_string()) return Integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.get<long>());
  throw std::invalid_argument("expected integer (number or decimal string)");
}

inline Rational json_fraction(const nlohmann::json& num, const nlohmann::json& den) {
  Rational q(json_integer(num), json_integer(den));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in algebra JSON");
  q.canonicalize();
  return q;
}

inline std::size_t json_index(const nlohmann::json& v, std::size_t dim) {
  const auto i = v.get<long>();
  if (i < 0 || static_cast<std::size_t>(i) >= dim) throw std::invalid_argument("index out of range in algebra JSON");
  return static_cast<std::size_t>(i);
}

}  // namespace detail

/// Parses the document; structural errors throw. The algebra itself is not
/// validated here; call validate_algebra.
inline LieAlgebra algebra_from_json(const nlohmann::json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  if (dim == 0) throw std::invalid_argument("algebra dimension must be positive");
  LieAlgebra L(j.at("name").get<std::string>(), dim);
  L.rank = j.at("rank").get<std::size_t>();
  L.center_dim = j.value("center_dim", std::size_t{0});
  for (const auto& e : j.at("structure_constants")) {
    if (e.size() != 5) throw std::invalid_argument("structure constant entry needs 5 fields");
    const auto a = detail::json_index(e[0], dim), b = detail::json_index(e[1], dim), k = detail::json_index(e[2], dim);
    L.structure(a, b, k) = detail::json_fraction(e[3], e[4]);
  }
  for (const auto& e : j.at("form")) {
    if (e.size() != 4) throw std::invalid_argument("form entry needs 4 fields");
    L.form(detail::json_index(e[0], dim), detail::json_index(e[1], dim)) = detail::json_fraction(e[2], e[3]);
  }
  return L;
}

}  // namespace cancx
