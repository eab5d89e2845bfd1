#include "qsp/genfun.hpp"

#include "qsp/bijections.hpp"

#include <numeric>
#include <stdexcept>

namespace qsp {

PolyTUV eulerian(int n) {
  if (n < 0) throw InputError("eulerian needs n >= 0");
  if (n == 0) return PolyTUV::constant(1);
  PolyTUV p;
  for_each_permutation(MultisetSpec(std::vector<int>(static_cast<std::size_t>(n), 1)),
                       [&p](const Word& w) {
                         const StatTriple s = stats(w);
                         p.add_term({s.des, s.asc, 0}, 1);
                       });
  return p;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Series<PolyQ> shifted_eulerian_egf(int order) {
  Series<PolyQ> s(order);
  s[0] = PolyQ::monomial({0, 0, 1});
  for (int i = 1; i <= order; ++i) s[i] = to_rational(eulerian(i)) * Rational(1, factorial(i));
  return s;
}

PolyQ shifted_egf_power_coefficient(int power, int n) {
  if (power < 0 || n < 0) throw InputError("coefficient extraction needs non-negative arguments");
  return shifted_eulerian_egf(n).pow(static_cast<unsigned>(power))[static_cast<std::size_t>(n)];
}

namespace {

PolyTUV integral_or_throw(const PolyQ& p, const char* what) {
  auto q = to_integral(p);
  if (!q) throw std::logic_error(std::string(what) + " produced a non-integral coefficient");
  return *q;
}

}  // namespace

PolyTUV corollary2_poly(const MultisetSpec& m) {
  const int power = m.total() - m.n() + 1;
  const PolyQ c = shifted_egf_power_coefficient(power, m.n());
  return integral_or_throw(c * Rational(factorial(m.n()), power), "corollary2_poly");
}

SeriesQ inverse_power_of_one_minus_t(int exponent, int order) {
  SeriesQ one_minus_t(order);
  one_minus_t[0] = 1;
  if (order >= 1) one_minus_t[1] = -1;
  return reciprocal(one_minus_t).pow(static_cast<unsigned>(exponent));
}

SeriesComparison eq2_series_check(const MultisetSpec& m, int order) {
  const int n = m.n();
  const int K = m.total();
  SeriesComparison out;
  for (int j = 0; j <= order; ++j) {
    BigInt jn = boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(n));
    out.closed_form.push_back(Rational(jn * binomial(K - n + j, j), K - n + 1));
  }
  const auto profile = qs_polynomial(m).t_profile();
  std::vector<Rational> q(profile.begin(), profile.end());
  const SeriesQ rhs = SeriesQ(order, q) * inverse_power_of_one_minus_t(K + 1, order);
  out.via_polynomial = rhs.coefficients();
  return out;
}

BigInt max_descent_count(const MultisetSpec& m) {
  return boost::multiprecision::pow(BigInt(m.total() - m.n() + 1), static_cast<unsigned>(m.n() - 1));
}

PolyTUV tuple_polynomial(int m, int n, int part_with_one) {
  PolyTUV p;
  for_each_tuple(m, n, part_with_one, [&p](const PermTuple& a) {
    Monomial mono{0, 0, a.empty_parts()};
    for (const auto& part : a.parts) {
      if (part.empty()) continue;
      const StatTriple s = stats(part);
      mono.t += s.des;
      mono.u += s.asc;
    }
    p.add_term(mono, 1);
  });
  return p;
}

PolyTUV p1_polynomial(int m, int n) { return tuple_polynomial(m, n, 1); }

PolyTUV p1_formula(int m, int n) {
  const PolyQ c = shifted_egf_power_coefficient(m, n);
  return integral_or_throw(c * Rational(factorial(n), m), "p1_formula");
}

PolyTUV tuple_formula(int m, int n) {
  const PolyQ c = shifted_egf_power_coefficient(m, n);
  return integral_or_throw(c * Rational(factorial(n)), "tuple_formula");
}

}  // namespace qsp
