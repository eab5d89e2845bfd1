#pragma once

// Ordered labeled trees: root 0, and every odd-level vertex labeled i has
// exactly k_i - 1 children, all labeled i.

#include "qsp/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsp {

struct TreeNode {
  Value label = 0;
  std::vector<TreeNode> children;

  bool operator==(const TreeNode&) const = default;
};

enum class TreeDefect {
  none,
  root_not_zero,
  label_out_of_range,
  odd_child_count,
  odd_child_label,
  label_multiset,
};

struct TreeCheck {
  TreeDefect defect = TreeDefect::none;
  std::string detail;

  explicit operator bool() const { return defect == TreeDefect::none; }
};

const char* to_string(TreeDefect d);

TreeCheck check_tree(const TreeNode& t, const MultisetSpec& m);
bool validate_tree(const TreeNode& t, const MultisetSpec& m);

/// Multiset of the non-root labels. Throws InputError if the labels skip a value.
MultisetSpec tree_multiset(const TreeNode& t);

std::size_t vertex_count(const TreeNode& t);

int cyclic_descents(WordView seq);
int cyclic_ascents(WordView seq);

/// first/last are the labels of the outer children of the root; both are
/// absent for the single-vertex tree, whose counts are all zero.
struct TreeStats {
  int cdes = 0;
  int casc = 0;
  int eleaf = 0;
  std::optional<Value> first;
  std::optional<Value> last;

  bool operator==(const TreeStats&) const = default;
};

TreeStats tree_stats(const TreeNode& t);

/// Every tree of the family for m, in generation order.
void for_each_tree(const MultisetSpec& m, const std::function<void(const TreeNode&)>& visit);

/// Every tree of the family for m, sorted by rendered text.
std::vector<TreeNode> enumerate_trees(const MultisetSpec& m);

/// `tree := label | label "(" tree ("," tree)* ")"`, no whitespace.
std::string render_tree(const TreeNode& t);
TreeNode parse_tree(std::string_view text);

}  // namespace qsp
