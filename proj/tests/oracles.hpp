#pragma once

// Slow, definition-level reference implementations. Nothing here calls into
// the library's algorithms; they are what the library is checked against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

// Quartic scan for i<j<k<l with w_i = w_k != w_j = w_l.
inline bool quasi_stirling(const Word& w) {
  const std::size_t L = w.size();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j)
      for (std::size_t k = j + 1; k < L; ++k)
        for (std::size_t l = k + 1; l < L; ++l)
          if (w[i] == w[k] && w[j] == w[l] && w[i] != w[j]) return false;
  return true;
}

// Cubic scan for i<j<k with w_i = w_k and w_j < w_i.
inline bool stirling(const Word& w) {
  const std::size_t L = w.size();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j)
      for (std::size_t k = j + 1; k < L; ++k)
        if (w[i] == w[k] && w[j] < w[i]) return false;
  return true;
}

struct Triple {
  int asc = 0, des = 0, plat = 0;
  bool operator==(const Triple&) const = default;
};

// Padded with zeros at both ends, then compared pairwise.
inline Triple stats(const Word& w) {
  if (w.empty()) return {};
  Word p{0};
  p.insert(p.end(), w.begin(), w.end());
  p.push_back(0);
  Triple t;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1]) ++t.asc;
    else if (p[i] > p[i + 1]) ++t.des;
    else ++t.plat;
  }
  return t;
}

// The sorted word 1^k1 2^k2 ... n^kn.
inline Word sorted_word(const std::vector<int>& mult) {
  Word w;
  for (std::size_t i = 0; i < mult.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(mult[i]), static_cast<int>(i + 1));
  return w;
}

// Every distinct rearrangement, filtered by the quartic scan; lexicographic.
inline std::vector<Word> qs_words(const std::vector<int>& mult) {
  Word w = sorted_word(mult);
  std::vector<Word> out;
  do {
    if (quasi_stirling(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

using Key = std::tuple<int, int, int>;  // (t, u, v) exponents
using Poly = std::map<Key, std::int64_t>;

inline Poly qs_poly(const std::vector<int>& mult) {
  Poly p;
  for (const auto& w : qs_words(mult)) {
    const Triple s = stats(w);
    ++p[{s.des, s.asc, s.plat}];
  }
  return p;
}

// Injective words of length n-r over [n], by choosing subsets and permuting.
inline std::vector<Word> partial_injections(int n, int r) {
  std::vector<Word> out;
  const int len = n - r;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + len, true);
  do {
    Word w;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) w.push_back(i + 1);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline int excedances(const Word& s) {
  int e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > static_cast<int>(i + 1)) ++e;
  return e;
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Classical Eulerian number <n, k> by the alternating sum.
inline std::int64_t eulerian_number(int n, int k) {
  std::int64_t s = 0;
  for (int j = 0; j <= k + 1; ++j) s += (j % 2 ? -1 : 1) * binom(n + 1, j) * ipow(k + 1 - j, n);
  return s;
}

// A_n(t,u) under the sentinel convention: a permutation with d classical
// descents has d+1 sentinel descents and n-d sentinel ascents.
inline Poly eulerian_poly(int n) {
  Poly p;
  if (n == 0) {
    p[{0, 0, 0}] = 1;
    return p;
  }
  for (int d = 0; d < n; ++d) p[{d + 1, n - d, 0}] = eulerian_number(n, d);
  return p;
}

}  // namespace oracle
