#pragma once

// Partial injections, their path-and-cycle notation, and the maps from
// permutations of {1, ..., n-1, n^m} and {1^m, 2, ..., n} onto J_{n+m-1,m}.

#include "qsp/core.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qsp {

/// An element of J_{n,r}: values[i-1] = sigma_i for i in the domain [n-r],
/// entries distinct and in [n], with 1 <= r <= n.
class PartialInj {
 public:
  /// Throws InputError if the invariants fail.
  PartialInj(int n, std::vector<Value> values);

  int codomain() const { return n_; }
  int domain() const { return static_cast<int>(values_.size()); }
  int unused() const { return n_ - domain(); }  // r
  const std::vector<Value>& values() const { return values_; }

  bool operator==(const PartialInj&) const = default;

 private:
  int n_;
  std::vector<Value> values_;
};

/// Number of i with sigma_i > i.
int exc(const PartialInj& s);

/// Paths <a_1,...,a_k> end outside the domain; cycles (a_1,...,a_k) close up.
struct PathCycleRep {
  std::vector<Word> paths;
  std::vector<Word> cycles;

  bool operator==(const PathCycleRep&) const = default;
};

/// Standard form: paths by increasing largest element, cycles smallest
/// element first and in decreasing order of smallest element.
PathCycleRep to_path_cycle(const PartialInj& s);

/// Accepts any valid representation, standard or not. The codomain is the
/// number of entries and r the number of paths.
PartialInj from_path_cycle(const PathCycleRep& rep);

bool is_standard(const PathCycleRep& rep);

/// Sum over paths and cycles of (asc - 1), asc with zero sentinels.
int path_cycle_excedances(const PathCycleRep& rep);

/// `<4,6,9><10><5,2,8,11>(1,7,3)`
std::string render_path_cycle(const PathCycleRep& rep);
PathCycleRep parse_path_cycle(std::string_view text);

/// `n:v1,v2,...`
std::string format_partial_inj(const PartialInj& s);
PartialInj parse_partial_inj(std::string_view text);

/// Permutation of {1, ..., n-1, n^m} to J_{n+m-1,m}; asc(w) = exc + 1.
PartialInj chi(WordView w, const MultisetSpec& m);
Word chi_inv(const PartialInj& s);

/// Permutation of {1^m, 2, ..., n} to J_{n+m-1,m}; des(w) = exc + 1.
PartialInj delta(WordView w, const MultisetSpec& m);
Word delta_inv(const PartialInj& s);

/// All injective words of length n-r over [n], lexicographically.
void for_each_partial_inj(int n, int r, const std::function<void(const PartialInj&)>& visit);
std::vector<PartialInj> enumerate_J(int n, int r);

}  // namespace qsp
