#include "support.hpp"

#include "qsp/genfun.hpp"

using namespace qsp;
using test::ms;

namespace {

PolyTUV mono(int t, int u, int v, long c = 1) { return PolyTUV::monomial({t, u, v}, BigInt(c)); }

}  // namespace

TEST_CASE("Eulerian polynomials", "[genfun]") {
  CHECK(eulerian(0) == PolyTUV::constant(1));
  CHECK(eulerian(1) == mono(1, 1, 0));
  CHECK(eulerian(2) == mono(1, 2, 0) + mono(2, 1, 0));
  for (int n = 0; n <= 7; ++n) {
    CHECK(eulerian(n).evaluate_at_ones() == factorial(n));
    CHECK(test::to_oracle(eulerian(n)) == oracle::eulerian_poly(n));
  }
  CHECK_THROWS_AS(eulerian(-1), InputError);
}

TEST_CASE("binomials and factorials", "[genfun]") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(factorial(25).str() == "15511210043330985984000000");
}

TEST_CASE("coefficient formula examples", "[genfun]") {
  CHECK(corollary2_poly(ms("2,2")) == mono(2, 2, 1, 2) + mono(1, 2, 2) + mono(2, 1, 2));
  CHECK(corollary2_poly(ms("2,1")) == mono(1, 2, 1) + mono(2, 1, 1) + mono(2, 2, 0));
  CHECK(corollary2_poly(ms("1")) == mono(1, 1, 0));
}

TEST_CASE("coefficient formula equals brute force", "[genfun][exhaustive]") {
  for (const auto& k : test::small_multisets(8)) {
    if (k.size() > 5) continue;
    const MultisetSpec m(k);
    INFO(m.to_string());
    REQUIRE(test::to_oracle(corollary2_poly(m)) == oracle::qs_poly(k));
  }
}

TEST_CASE("series identity examples", "[genfun]") {
  const auto c22 = eq2_series_check(ms("2,2"), 4);
  const std::vector<Rational> expect{0, 1, 8, 30, 80};
  CHECK(c22.closed_form == expect);
  CHECK(c22.via_polynomial == expect);
  CHECK(c22.agree());
  const auto c1 = eq2_series_check(ms("1"), 3);
  CHECK(c1.closed_form == std::vector<Rational>{0, 1, 2, 3});
  CHECK(c1.agree());
}

TEST_CASE("series identity holds to order 8", "[genfun][exhaustive]") {
  for (const auto& k : test::small_multisets(7)) {
    const MultisetSpec m(k);
    const auto c = eq2_series_check(m, 8);
    INFO(m.to_string());
    REQUIRE(c.closed_form.size() == 9);
    REQUIRE(c.closed_form[0] == 0);
    // Closed form recomputed here with 64-bit integers.
    const int n = m.n(), K = m.total();
    for (int j = 0; j <= 8; ++j) {
      const Rational direct(oracle::ipow(j, n) * oracle::binom(K - n + j, j), K - n + 1);
      REQUIRE(c.closed_form[static_cast<std::size_t>(j)] == direct);
    }
    REQUIRE(c.agree());
  }
}

TEST_CASE("inverse powers of 1 - t", "[genfun]") {
  for (int K = 0; K <= 8; ++K) {
    const SeriesQ s = inverse_power_of_one_minus_t(K + 1, 10);
    for (int m = 0; m <= 10; ++m) REQUIRE(s[static_cast<std::size_t>(m)] == Rational(oracle::binom(m + K, K)));
  }
}

TEST_CASE("max descent count", "[genfun]") {
  CHECK(max_descent_count(ms("4")) == 1);
  CHECK(max_descent_count(ms("2,2,2")) == 16);
  CHECK(max_descent_count(ms("3,1,1")) == 9);
  CHECK(max_descent_count(ms("2,2")) == 3);
  for (const auto& k : test::small_multisets(8)) {
    std::int64_t count = 0;
    for (const auto& x : oracle::qs_words(k))
      if (oracle::stats(x).des == static_cast<int>(k.size())) ++count;
    REQUIRE(max_descent_count(MultisetSpec(k)) == count);
  }
}

TEST_CASE("tuple polynomials", "[genfun]") {
  CHECK(p1_polynomial(2, 2) == mono(1, 2, 1) + mono(2, 1, 1) + mono(2, 2, 0));
  CHECK(p1_polynomial(1, 1) == mono(1, 1, 0));
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; m + n <= 7; ++n) {
      std::vector<int> k(static_cast<std::size_t>(n), 1);
      k[0] = m;
      const PolyTUV brute = p1_polynomial(m, n);
      REQUIRE(brute == p1_formula(m, n));
      REQUIRE(test::to_oracle(brute) == oracle::qs_poly(k));
      if (m + n <= 6) {
        REQUIRE(tuple_polynomial(m, n, 0) == tuple_formula(m, n));
        for (int j = 2; j <= m; ++j) REQUIRE(tuple_polynomial(m, n, j) == brute);
      }
    }
}
