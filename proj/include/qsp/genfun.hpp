#pragma once

// Generating-function identities for quasi-Stirling polynomials, in exact
// arithmetic.

#include "qsp/core.hpp"
#include "qsp/poly.hpp"

#include <vector>

namespace qsp {

/// Bivariate Eulerian polynomial, sum of t^des u^asc over the n! permutations
/// of [n], by enumeration. A_0 = 1.
PolyTUV eulerian(int n);

/// The series A~(t,u;z) - 1 + v = v + sum_{i>=1} A_i z^i / i!, truncated at z^order.
Series<PolyQ> shifted_eulerian_egf(int order);

/// [z^n] (A~(t,u;z) - 1 + v)^power.
PolyQ shifted_egf_power_coefficient(int power, int n);

/// n!/(K-n+1) [z^n] (A~ - 1 + v)^(K-n+1). Throws std::logic_error if the
/// scaled coefficient is not integral.
PolyTUV corollary2_poly(const MultisetSpec& m);

struct SeriesComparison {
  /// m^n/(K-n+1) * C(K-n+m, m) for m = 0..order.
  std::vector<Rational> closed_form;
  /// Q(t,1,1) / (1-t)^(K+1), coefficients 0..order.
  std::vector<Rational> via_polynomial;

  bool agree() const { return closed_form == via_polynomial; }
};

SeriesComparison eq2_series_check(const MultisetSpec& m, int order);

/// (1-t)^-(exponent), truncated at t^order, as reciprocal-then-power.
SeriesQ inverse_power_of_one_minus_t(int exponent, int order);

BigInt binomial(int n, int k);
BigInt factorial(int n);

/// (K-n+1)^(n-1).
BigInt max_descent_count(const MultisetSpec& m);

/// Sum over P_{m,n} (part_with_one = 0) or P^j_{m,n} (part_with_one = j) of
/// v^|E| times t^des u^asc of each non-empty part. Enumerates the tuples.
PolyTUV tuple_polynomial(int m, int n, int part_with_one);

/// tuple_polynomial(m, n, 1).
PolyTUV p1_polynomial(int m, int n);

/// n!/m [z^n](A~ - 1 + v)^m.
PolyTUV p1_formula(int m, int n);

/// n! [z^n](A~ - 1 + v)^m.
PolyTUV tuple_formula(int m, int n);

}  // namespace qsp
