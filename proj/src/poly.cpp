#include "qsp/poly.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qsp {

PolyQ to_rational(const PolyTUV& p) {
  PolyQ out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Rational(c));
  return out;
}

std::optional<PolyTUV> to_integral(const PolyQ& p) {
  PolyTUV out;
  for (const auto& [m, c] : p.terms()) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    out.add_term(m, boost::multiprecision::numerator(c));
  }
  return out;
}

std::string poly_to_json(const PolyTUV& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["t"] = m.t;
    term["u"] = m.u;
    term["v"] = m.v;
    term["c"] = c.str();
    arr.push_back(std::move(term));
  }
  return arr.dump();
}

PolyTUV poly_from_json(const std::string& text) {
  PolyTUV out;
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  for (const auto& term : arr) {
    Monomial m{term.at("t").get<int>(), term.at("u").get<int>(), term.at("v").get<int>()};
    out.add_term(m, BigInt(term.at("c").get<std::string>()));
  }
  return out;
}

namespace {

void append_power(std::ostringstream& os, bool& first_factor, char var, int e) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (e > 1) os << '^' << e;
  first_factor = false;
}

}  // namespace

std::string poly_to_string(const PolyTUV& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : p.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    bool first_factor = true;
    if (mag != 1 || m.degree() == 0) {
      os << mag;
      first_factor = false;
    }
    append_power(os, first_factor, 't', m.t);
    append_power(os, first_factor, 'u', m.u);
    append_power(os, first_factor, 'v', m.v);
  }
  return os.str();
}

std::string rational_to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

SeriesQ reciprocal(const SeriesQ& s) {
  if (s[0] == 0) throw std::domain_error("series reciprocal needs a non-zero constant term");
  SeriesQ out(s.order());
  const Rational inv0 = 1 / s[0];
  out[0] = inv0;
  for (int k = 1; k <= s.order(); ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += s[i] * out[k - i];
    out[k] = -acc * inv0;
  }
  return out;
}

std::string series_to_json(const SeriesQ& s) {
  nlohmann::ordered_json j;
  j["order"] = s.order();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(rational_to_string(c));
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

}  // namespace qsp
