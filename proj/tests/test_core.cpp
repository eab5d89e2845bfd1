#include "support.hpp"

#include "qsp/core.hpp"

#include <random>

using namespace qsp;
using test::ms;
using test::w;

TEST_CASE("stats uses zero sentinels at both ends", "[core]") {
  CHECK(stats(w("1,2,2,1")) == StatTriple{2, 2, 1});
  CHECK(stats(w("2,7,4,7,5,6,3,3,5,1,5")) == StatTriple{6, 5, 1});
  CHECK(stats(Word{}) == StatTriple{0, 0, 0});
  CHECK(stats(w("1")) == StatTriple{1, 1, 0});
}

TEST_CASE("quasi-Stirling recognition", "[core]") {
  CHECK_FALSE(is_quasi_stirling(w("1,2,1,2")));
  CHECK(is_quasi_stirling(w("2,1,1,2")));
  CHECK(is_quasi_stirling(w("2,7,4,7,5,6,3,3,5,1,5")));
  CHECK(is_quasi_stirling(Word{}));
  CHECK_FALSE(is_quasi_stirling(w("1,2,3,1,3,2")));
  CHECK(is_quasi_stirling(w("1,2,3,3,2,1")));
}

TEST_CASE("Stirling recognition", "[core]") {
  CHECK(is_stirling(w("1,2,2,1")));
  CHECK_FALSE(is_stirling(w("2,1,1,2")));
  CHECK_FALSE(is_stirling(w("1,2,1,2")));
}

TEST_CASE("enumeration examples", "[core]") {
  CHECK(enumerate_qs(ms("2,2")) == std::vector<Word>{w("1,1,2,2"), w("1,2,2,1"), w("2,1,1,2"), w("2,2,1,1")});
  CHECK(enumerate_qs(ms("1,2")) == std::vector<Word>{w("1,2,2"), w("2,1,2"), w("2,2,1")});
  CHECK(enumerate_qs(ms("1")) == std::vector<Word>{w("1")});
}

TEST_CASE("enumeration matches the quartic-scan filter for K <= 8", "[core][exhaustive]") {
  for (const auto& k : test::small_multisets(8)) {
    INFO("multiset " << MultisetSpec(k).to_string());
    REQUIRE(enumerate_qs(MultisetSpec(k)) == oracle::qs_words(k));
  }
}

TEST_CASE("enumeration by first value partitions the full listing", "[core]") {
  for (const auto& k : test::small_multisets(6)) {
    const MultisetSpec m(k);
    std::vector<Word> joined;
    for (Value first = 1; first <= m.n(); ++first)
      for_each_qs(m, first, [&](const Word& x) { joined.push_back(x); });
    CHECK(joined == enumerate_qs(m));
  }
}

TEST_CASE("recognizer agrees with the quartic scan on random words", "[core][property]") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int L = static_cast<int>(rng() % 10);
    Word x;
    for (int i = 0; i < L; ++i) x.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
    INFO(format_word(x));
    REQUIRE(is_quasi_stirling(x) == oracle::quasi_stirling(x));
    REQUIRE(is_stirling(x) == oracle::stirling(x));
    const oracle::Triple t = oracle::stats(x);
    const StatTriple s = stats(x);
    REQUIRE((s.asc == t.asc && s.des == t.des && s.plat == t.plat));
  }
}

TEST_CASE("statistics sum to length plus one", "[core][property]") {
  for (const auto& k : test::small_multisets(7)) {
    for_each_permutation(MultisetSpec(k), [](const Word& x) {
      const StatTriple s = stats(x);
      REQUIRE(s.asc + s.des + s.plat == static_cast<int>(x.size()) + 1);
      REQUIRE(s.asc >= 1);
      REQUIRE(s.des >= 1);
    });
  }
}

TEST_CASE("complement swaps ascents and descents", "[core][property]") {
  CHECK(complement(w("1,3,1,2"), 3) == w("3,1,3,2"));
  CHECK(complement(w("1"), 1) == w("1"));
  CHECK(complement(w("1,2,2,1"), 2) == w("2,1,1,2"));
  CHECK_THROWS_AS(complement(w("1,4"), 3), InputError);
  for (const auto& k : test::small_multisets(6)) {
    const int n = static_cast<int>(k.size());
    for_each_permutation(MultisetSpec(k), [n](const Word& x) {
      const Word c = complement(x, n);
      const StatTriple a = stats(x);
      const StatTriple b = stats(c);
      REQUIRE((a.asc == b.des && a.des == b.asc && a.plat == b.plat));
      REQUIRE(is_quasi_stirling(x) == is_quasi_stirling(c));
    });
  }
}

TEST_CASE("qs_polynomial examples and oracle agreement", "[core]") {
  const PolyTUV p22 = PolyTUV::monomial({2, 2, 1}, 2) + PolyTUV::monomial({1, 2, 2}) + PolyTUV::monomial({2, 1, 2});
  CHECK(qs_polynomial(ms("2,2")) == p22);
  const PolyTUV p21 = PolyTUV::monomial({1, 2, 1}) + PolyTUV::monomial({2, 2, 0}) + PolyTUV::monomial({2, 1, 1});
  CHECK(qs_polynomial(ms("2,1")) == p21);
  CHECK(qs_polynomial(ms("1")) == PolyTUV::monomial({1, 1, 0}));
  for (const auto& k : test::small_multisets(7)) {
    const PolyTUV p = qs_polynomial(MultisetSpec(k));
    CHECK(test::to_oracle(p) == oracle::qs_poly(k));
    CHECK(p.evaluate_at_ones() == BigInt(oracle::qs_words(k).size()));
  }
}

TEST_CASE("multiset specs validate their input", "[core][errors]") {
  CHECK_THROWS_AS(MultisetSpec(std::vector<int>{}), InputError);
  CHECK_THROWS_AS(MultisetSpec(std::vector<int>{2, 0}), InputError);
  CHECK_THROWS_AS(ms("2,-1"), InputError);
  CHECK_THROWS_AS(ms(""), InputError);
  CHECK_THROWS_AS(ms("2,,2"), InputError);
  CHECK_THROWS_AS(ms("2, 2"), InputError);
  CHECK_THROWS_AS(ms("a"), InputError);
  const MultisetSpec m = ms("1,1,2,1,3,1,2");
  CHECK(m.n() == 7);
  CHECK(m.total() == 11);
  CHECK(m.multiplicity(5) == 3);
  CHECK(m.to_string() == "1,1,2,1,3,1,2");
  CHECK(m.admits(w("2,7,4,7,5,6,3,3,5,1,5")));
  CHECK_FALSE(m.admits(w("2,7,4,7,5,6,3,3,5,1")));
  CHECK_THROWS_AS(m.require(w("1,1")), InputError);
  CHECK(MultisetSpec::of_word(w("2,2,1")) == ms("1,2"));
  CHECK_THROWS_AS(MultisetSpec::of_word(w("1,3")), InputError);
}

TEST_CASE("word wire format", "[core]") {
  CHECK(format_word(w("2,7,4")) == "2,7,4");
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("1,,2"), InputError);
  CHECK_THROWS_AS(parse_word("1,2,"), InputError);
  CHECK_THROWS_AS(parse_word("+1"), InputError);
}

TEST_CASE("compositions and multiset sweeps", "[core]") {
  const auto c = compositions(4, 2);
  CHECK(c == std::vector<MultisetSpec>{ms("1,3"), ms("2,2"), ms("3,1")});
  CHECK(compositions(3, 4).empty());
  std::size_t total = 0;
  for (int K = 1; K <= 8; ++K) total += std::size_t{1} << (K - 1);
  CHECK(multisets_up_to(8).size() == total);
}
