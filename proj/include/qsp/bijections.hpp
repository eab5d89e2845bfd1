#pragma once

// Bijections between trees of the T_M family and quasi-Stirling
// permutations, the multiplicity-moving maps on trees, and the tuple
// encoding of permutations of {1^m, 2, ..., n}.

#include "qsp/core.hpp"
#include "qsp/trees.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qsp {

/// Reads a tree off as a word: each child c of the root contributes its
/// label, then for each child e of c the word of e (as a root) followed by
/// c's label again.
Word phi(const TreeNode& t);

/// Inverse of phi. Throws InputError if w is not quasi-Stirling.
TreeNode phi_inv(WordView w);

/// Knobs for fault injection in the verification harness. Default-constructed
/// options give the real maps.
struct PsiOptions {
  /// Attach the moved even vertex as the leftmost child instead of the rightmost.
  bool moved_vertex_leftmost = false;
};

/// Moves one copy of j to j-1: T_M -> T_{M_j}. Requires j >= 2 and k_j >= 2.
/// Preserves (cdes, casc, eleaf).
TreeNode psi(const TreeNode& t, Value j, PsiOptions opts = {});

/// Inverse of psi. Requires j >= 2 and multiplicity of j-1 at least 2.
TreeNode psi_inv(const TreeNode& t, Value j);

/// {1^(K-n+1), 2, ..., n}.
MultisetSpec reduced_multiset(const MultisetSpec& m);

/// The j's that big_psi applies to a tree over m, in order.
std::vector<Value> psi_schedule(const MultisetSpec& m);

TreeNode big_psi(const TreeNode& t, PsiOptions opts = {});

/// Inverse of big_psi, for a tree over reduced_multiset(target).
TreeNode big_psi_inv(const TreeNode& t, const MultisetSpec& target);

/// phi . big_psi . phi_inv. Throws InputError if w is not quasi-Stirling.
Word big_phi(WordView w, PsiOptions opts = {});

/// Inverse of big_phi: w must be a quasi-Stirling permutation of reduced_multiset(target).
Word big_phi_inv(WordView w, const MultisetSpec& target);

/// (asc, des, plat)-preserving bijection between quasi-Stirling permutations of
/// source and target, which must agree in n and K.
Word transport(WordView w, const MultisetSpec& source, const MultisetSpec& target);

/// Splits w = p1 1 p2 1 ... pm 1 with every part strictly decreasing. m must
/// have the shape (m, 1, ..., 1) and des(w) must equal n.
std::vector<Word> max_descent_decompose(WordView w, const MultisetSpec& m);

/// m pairwise disjoint words whose values cover [n].
struct PermTuple {
  std::vector<Word> parts;

  /// n, the total length. Throws InputError unless the parts cover [n] exactly once.
  int validate() const;

  int empty_parts() const;

  bool operator==(const PermTuple&) const = default;
};

/// Parts joined by `|`, values by `,`; empty parts are empty strings.
std::string format_tuple(const PermTuple& a);
PermTuple parse_tuple(std::string_view text);

/// Every m-tuple of P_{m,n}; if `part_with_one` is in [1, m], only those
/// whose part `part_with_one` contains 1.
void for_each_tuple(int m, int n, int part_with_one,
                    const std::function<void(const PermTuple&)>& visit);

/// For p1 = s 1 t: s 1 p2 1 ... 1 pm 1 t. Requires 1 in the first part.
Word zeta(const PermTuple& a);

/// Inverse of zeta; m is the number of 1's in w.
PermTuple zeta_inv(WordView w, const MultisetSpec& m);

}  // namespace qsp
