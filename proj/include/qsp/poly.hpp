#pragma once

// Exact polynomials in t, u, v and truncated power series over them.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent triple of t^t u^u v^v.
struct Monomial {
  int t = 0;
  int u = 0;
  int v = 0;

  int degree() const { return t + u + v; }
  bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic order: total degree first, then (t, u, v).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return std::tuple(a.degree(), a.t, a.u, a.v) <
           std::tuple(b.degree(), b.t, b.u, b.v);
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  return {a.t + b.t, a.u + b.u, a.v + b.v};
}

/// Sparse polynomial in t, u, v. Zero coefficients are never stored, so
/// structural equality is coefficient-wise equality.
template <class Coeff>
class Poly {
 public:
  using Terms = std::map<Monomial, Coeff, GradedLex>;

  Poly() = default;
  explicit Poly(long c) { add_term({}, Coeff(c)); }

  static Poly constant(const Coeff& c) { return monomial({}, c); }

  static Poly monomial(Monomial m, const Coeff& c = Coeff(1)) {
    Poly p;
    p.add_term(m, c);
    return p;
  }

  void add_term(Monomial m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Constant value if the polynomial has no non-constant term.
  std::optional<Coeff> as_constant() const {
    if (terms_.empty()) return Coeff(0);
    if (terms_.size() == 1 && terms_.begin()->first == Monomial{})
      return terms_.begin()->second;
    return std::nullopt;
  }

  /// Sum of all coefficients (evaluation at t = u = v = 1).
  Coeff evaluate_at_ones() const {
    Coeff s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  /// Coefficients of t^0, t^1, ... after setting u = v = 1.
  std::vector<Coeff> t_profile() const {
    std::vector<Coeff> out;
    for (const auto& [m, c] : terms_) {
      if (static_cast<std::size_t>(m.t) >= out.size()) out.resize(m.t + 1, Coeff(0));
      out[m.t] += c;
    }
    return out;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using PolyTUV = Poly<BigInt>;
using PolyQ = Poly<Rational>;

PolyQ to_rational(const PolyTUV& p);

/// Integer image of p, or nullopt if some coefficient is not integral.
std::optional<PolyTUV> to_integral(const PolyQ& p);

/// `[{"t":..,"u":..,"v":..,"c":"<decimal>"}, ...]` in graded-lex order.
std::string poly_to_json(const PolyTUV& p);
PolyTUV poly_from_json(const std::string& text);

/// Human-readable form, e.g. `2*t^2*u^2*v + t*u^2*v^2`.
std::string poly_to_string(const PolyTUV& p);

std::string rational_to_string(const Rational& q);  // always "num/den"

/// Truncated power series c_0 + c_1 z + ... + c_T z^T.
template <class C>
class Series {
 public:
  explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1, C(0)) {}

  Series(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(order) + 1, C(0));
  }

  static Series one(int order) {
    Series s(order);
    s.coeffs_[0] = C(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](std::size_t i) const { return coeffs_.at(i); }
  C& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  friend Series operator+(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    Series out(order);
    for (int i = 0; i <= order; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    Series out(order);
    for (int i = 0; i <= order; ++i)
      for (int k = 0; i + k <= order; ++k)
        out.coeffs_[i + k] = out.coeffs_[i + k] + a.coeffs_[i] * b.coeffs_[k];
    return out;
  }

  Series pow(unsigned exponent) const {
    Series result = one(order());
    Series base = *this;
    while (exponent > 0) {
      if (exponent & 1u) result = result * base;
      exponent >>= 1u;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<C> coeffs_;
};

using SeriesQ = Series<Rational>;

/// Reciprocal of a series with non-zero constant term. Throws on a zero constant term.
SeriesQ reciprocal(const SeriesQ& s);

/// `{"order":T,"coeffs":["num/den",...]}`
std::string series_to_json(const SeriesQ& s);

}  // namespace qsp
