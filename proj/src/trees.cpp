#include "qsp/trees.hpp"

#include <algorithm>
#include <cctype>

namespace qsp {

const char* to_string(TreeDefect d) {
  switch (d) {
    case TreeDefect::none: return "ok";
    case TreeDefect::root_not_zero: return "root-not-zero";
    case TreeDefect::label_out_of_range: return "label-out-of-range";
    case TreeDefect::odd_child_count: return "odd-child-count";
    case TreeDefect::odd_child_label: return "odd-child-label";
    case TreeDefect::label_multiset: return "label-multiset";
  }
  return "unknown";
}

namespace {

void count_labels(const TreeNode& t, std::vector<int>& counts, bool& negative) {
  if (t.label < 0) {
    negative = true;
  } else {
    if (static_cast<std::size_t>(t.label) >= counts.size()) counts.resize(t.label + 1, 0);
    ++counts[static_cast<std::size_t>(t.label)];
  }
  for (const auto& c : t.children) count_labels(c, counts, negative);
}

TreeCheck check_structure(const TreeNode& t, const MultisetSpec& m, int level) {
  if (level % 2 == 1) {
    if (t.label < 1 || t.label > m.n())
      return {TreeDefect::label_out_of_range, "odd vertex label " + std::to_string(t.label)};
    const int want = m.multiplicity(t.label) - 1;
    if (static_cast<int>(t.children.size()) != want)
      return {TreeDefect::odd_child_count,
              "odd vertex " + std::to_string(t.label) + " has " +
                  std::to_string(t.children.size()) + " children, needs " + std::to_string(want)};
    for (const auto& c : t.children)
      if (c.label != t.label)
        return {TreeDefect::odd_child_label, "odd vertex " + std::to_string(t.label) +
                                                 " has a child labeled " + std::to_string(c.label)};
  }
  for (const auto& c : t.children) {
    TreeCheck r = check_structure(c, m, level + 1);
    if (!r) return r;
  }
  return {};
}

}  // namespace

TreeCheck check_tree(const TreeNode& t, const MultisetSpec& m) {
  if (t.label != 0) return {TreeDefect::root_not_zero, "root label " + std::to_string(t.label)};
  if (TreeCheck r = check_structure(t, m, 0); !r) return r;

  std::vector<int> counts;
  bool negative = false;
  count_labels(t, counts, negative);
  std::vector<int> want(static_cast<std::size_t>(m.n()) + 1, 0);
  want[0] = 1;
  for (Value i = 1; i <= m.n(); ++i) want[static_cast<std::size_t>(i)] = m.multiplicity(i);
  counts.resize(std::max(counts.size(), want.size()), 0);
  want.resize(counts.size(), 0);
  if (negative || counts != want)
    return {TreeDefect::label_multiset, "labels differ from {0} + {" + m.to_string() + "}"};
  return {};
}

bool validate_tree(const TreeNode& t, const MultisetSpec& m) {
  return static_cast<bool>(check_tree(t, m));
}

MultisetSpec tree_multiset(const TreeNode& t) {
  if (t.children.empty()) return MultisetSpec::empty();
  std::vector<int> counts;
  bool negative = false;
  for (const auto& c : t.children) count_labels(c, counts, negative);
  if (negative) throw InputError("tree labels must be non-negative");
  if (counts.empty()) counts.push_back(0);
  if (counts[0] != 0) throw InputError("only the root may be labeled 0");
  return MultisetSpec(std::vector<int>(counts.begin() + 1, counts.end()));
}

std::size_t vertex_count(const TreeNode& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

int cyclic_descents(WordView seq) {
  int d = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] > seq[(i + 1) % seq.size()]) ++d;
  return d;
}

int cyclic_ascents(WordView seq) {
  int a = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < seq[(i + 1) % seq.size()]) ++a;
  return a;
}

namespace {

void accumulate_stats(const TreeNode& t, int level, TreeStats& s) {
  Word seq{t.label};
  for (const auto& c : t.children) seq.push_back(c.label);
  s.cdes += cyclic_descents(seq);
  s.casc += cyclic_ascents(seq);
  if (t.children.empty() && level % 2 == 0 && level > 0) ++s.eleaf;
  for (const auto& c : t.children) accumulate_stats(c, level + 1, s);
}

}  // namespace

TreeStats tree_stats(const TreeNode& t) {
  TreeStats s;
  if (t.children.empty()) return s;
  accumulate_stats(t, 0, s);
  s.first = t.children.front().label;
  s.last = t.children.back().label;
  return s;
}

namespace {

// Generation works on a flat description: each even vertex (the root or a
// child of some odd vertex) owns an ordered list of odd labels. Even
// vertices are filled in breadth-first order, each taking an ordered
// selection from the labels not yet placed.
class TreeGenerator {
 public:
  TreeGenerator(const MultisetSpec& m, const std::function<void(const TreeNode&)>& visit)
      : m_(m), visit_(visit) {
    even_label_.push_back(0);
    evens_of_.resize(static_cast<std::size_t>(m.n()) + 1);
    for (Value i = 1; i <= m.n(); ++i)
      for (int c = 0; c < m.multiplicity(i) - 1; ++c) {
        evens_of_[static_cast<std::size_t>(i)].push_back(static_cast<int>(even_label_.size()));
        even_label_.push_back(i);
      }
    odd_children_.resize(even_label_.size());
    placed_.assign(static_cast<std::size_t>(m.n()) + 1, false);
    queue_.push_back(0);
  }

  void run() { fill(0); }

 private:
  void fill(std::size_t pos) {
    if (pos == queue_.size()) {
      if (unplaced_ == 0) visit_(build(0));
      return;
    }
    extend(pos);
  }

  // Chooses the ordered odd children of queue_[pos] one label at a time.
  void extend(std::size_t pos) {
    fill(pos + 1);
    const int e = queue_[pos];
    for (Value x = 1; x <= m_.n(); ++x) {
      if (placed_[static_cast<std::size_t>(x)]) continue;
      placed_[static_cast<std::size_t>(x)] = true;
      --unplaced_;
      odd_children_[static_cast<std::size_t>(e)].push_back(x);
      const auto& evens = evens_of_[static_cast<std::size_t>(x)];
      queue_.insert(queue_.end(), evens.begin(), evens.end());
      extend(pos);
      queue_.resize(queue_.size() - evens.size());
      odd_children_[static_cast<std::size_t>(e)].pop_back();
      ++unplaced_;
      placed_[static_cast<std::size_t>(x)] = false;
    }
  }

  TreeNode build(int even) const {
    TreeNode node{even_label_[static_cast<std::size_t>(even)], {}};
    for (Value x : odd_children_[static_cast<std::size_t>(even)]) {
      TreeNode odd{x, {}};
      for (int e : evens_of_[static_cast<std::size_t>(x)]) odd.children.push_back(build(e));
      node.children.push_back(std::move(odd));
    }
    return node;
  }

  const MultisetSpec& m_;
  const std::function<void(const TreeNode&)>& visit_;
  std::vector<Value> even_label_;
  std::vector<std::vector<int>> evens_of_;
  std::vector<std::vector<Value>> odd_children_;
  std::vector<bool> placed_;
  std::vector<int> queue_;
  int unplaced_ = m_.n();
};

}  // namespace

void for_each_tree(const MultisetSpec& m, const std::function<void(const TreeNode&)>& visit) {
  if (m.n() == 0) {
    visit(TreeNode{});
    return;
  }
  TreeGenerator(m, visit).run();
}

std::vector<TreeNode> enumerate_trees(const MultisetSpec& m) {
  std::vector<std::pair<std::string, TreeNode>> keyed;
  for_each_tree(m, [&keyed](const TreeNode& t) { keyed.emplace_back(render_tree(t), t); });
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TreeNode> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

namespace {

void render_into(const TreeNode& t, std::string& out) {
  out += std::to_string(t.label);
  if (t.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ',';
    render_into(t.children[i], out);
  }
  out += ')';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  TreeNode parse() {
    TreeNode t = node();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  TreeNode node() {
    TreeNode t{label(), {}};
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      t.children.push_back(node());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        t.children.push_back(node());
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    return t;
  }

  Value label() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) fail("label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a decimal label");
    return static_cast<Value>(v);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("malformed tree at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_tree(const TreeNode& t) {
  std::string out;
  render_into(t, out);
  return out;
}

TreeNode parse_tree(std::string_view text) { return TreeParser(text).parse(); }

}  // namespace qsp
