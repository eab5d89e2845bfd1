#pragma once

// Multisets, multiset permutations and their boundary statistics.

#include "qsp/poly.hpp"

#include <compare>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsp {

using Value = int;

/// A permutation of a multiset, as the sequence of its values. The empty
/// word is allowed.
using Word = std::vector<Value>;
using WordView = std::span<const Value>;

/// Raised for malformed or out-of-contract input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The multiset {1^k_1, ..., n^k_n}, every k_i >= 1.
class MultisetSpec {
 public:
  /// Throws InputError unless mult is non-empty and every entry is positive.
  explicit MultisetSpec(std::vector<int> mult);

  /// The empty multiset. Only meaningful for the single-vertex tree.
  static MultisetSpec empty() { return MultisetSpec(); }

  /// Multiset of the values of w. Throws if some value in [1, max] is absent.
  static MultisetSpec of_word(WordView w);

  /// Parses `k1,k2,...`.
  static MultisetSpec parse(std::string_view text);

  int n() const { return static_cast<int>(mult_.size()); }
  int total() const { return total_; }  // K
  int multiplicity(Value i) const { return mult_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& multiplicities() const { return mult_; }

  /// True iff w is a permutation of this multiset.
  bool admits(WordView w) const;

  /// Throws InputError unless admits(w).
  void require(WordView w) const;

  std::string to_string() const;

  auto operator<=>(const MultisetSpec&) const = default;

 private:
  MultisetSpec() = default;

  std::vector<int> mult_;
  int total_ = 0;
};

/// Ascents, descents and plateaux with zero sentinels at both ends.
struct StatTriple {
  int asc = 0;
  int des = 0;
  int plat = 0;

  auto operator<=>(const StatTriple&) const = default;
};

StatTriple stats(WordView w);

/// No i<j<k<l with w_i = w_k and w_j = w_l.
bool is_quasi_stirling(WordView w);

/// Every value strictly between two equal values exceeds them.
bool is_stirling(WordView w);

/// Calls visit on every quasi-Stirling permutation of m in lexicographic order.
void for_each_qs(const MultisetSpec& m, const std::function<void(const Word&)>& visit);

/// As above, restricted to words starting with `first`. The union over all
/// first values, in increasing order, is the full enumeration.
void for_each_qs(const MultisetSpec& m, Value first,
                 const std::function<void(const Word&)>& visit);

std::vector<Word> enumerate_qs(const MultisetSpec& m);

/// Calls visit on every permutation of m (quasi-Stirling or not), lexicographically.
void for_each_permutation(const MultisetSpec& m, const std::function<void(const Word&)>& visit);

/// Sum of t^des u^asc v^plat over the quasi-Stirling permutations of m.
PolyTUV qs_polynomial(const MultisetSpec& m);

PolyTUV stat_monomial(const StatTriple& s);

/// i -> n+1-i. Throws InputError if a value lies outside [1, n].
Word complement(WordView w, int n);

/// All n-compositions of K, lexicographically.
std::vector<MultisetSpec> compositions(int K, int n);

/// All compositions with 1 <= K <= max_K, ordered by K, then n, then lexicographically.
std::vector<MultisetSpec> multisets_up_to(int max_K);

/// Comma separated decimals, no whitespace. The empty word is "".
std::string format_word(WordView w);
Word parse_word(std::string_view text);

/// Shared parser for comma separated decimal lists. Empty text gives an empty list.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace qsp
