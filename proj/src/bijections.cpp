#include "qsp/bijections.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

namespace qsp {

namespace {

void phi_into(const TreeNode& t, Word& out) {
  for (const auto& odd : t.children) {
    out.push_back(odd.label);
    for (const auto& even : odd.children) {
      phi_into(even, out);
      out.push_back(odd.label);
    }
  }
}

// Odd children of a root whose word is w. w is assumed quasi-Stirling, so
// the stretches between consecutive copies of w[0] share no values with
// the rest of the word.
std::vector<TreeNode> unread(WordView w) {
  std::vector<TreeNode> odds;
  while (!w.empty()) {
    const Value r = w.front();
    std::size_t last = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] == r) last = i;
    TreeNode odd{r, {}};
    std::size_t seg_begin = 1;
    for (std::size_t i = 1; i <= last; ++i) {
      if (w[i] != r) continue;
      odd.children.push_back(TreeNode{r, unread(w.subspan(seg_begin, i - seg_begin))});
      seg_begin = i + 1;
    }
    odds.push_back(std::move(odd));
    w = w.subspan(last + 1);
  }
  return odds;
}

}  // namespace

Word phi(const TreeNode& t) {
  if (t.label != 0) throw InputError("phi needs a tree rooted at 0");
  Word out;
  phi_into(t, out);
  return out;
}

TreeNode phi_inv(WordView w) {
  if (!is_quasi_stirling(w))
    throw InputError("word " + format_word(w) + " is not quasi-Stirling");
  return TreeNode{0, unread(w)};
}

namespace {

using Path = std::vector<std::size_t>;

TreeNode& at(TreeNode& root, std::span<const std::size_t> path) {
  TreeNode* node = &root;
  for (std::size_t i : path) node = &node->children[i];
  return *node;
}

bool find_odd_from(const TreeNode& t, Value label, int level, Path& path) {
  if (level % 2 == 1 && t.label == label) return true;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(i);
    if (find_odd_from(t.children[i], label, level + 1, path)) return true;
    path.pop_back();
  }
  return false;
}

Path find_odd(const TreeNode& t, Value label) {
  Path p;
  if (!find_odd_from(t, label, 0, p))
    throw InputError("tree has no odd vertex labeled " + std::to_string(label));
  return p;
}

bool strictly_below(const Path& inner, const Path& outer) {
  return inner.size() > outer.size() && std::equal(outer.begin(), outer.end(), inner.begin());
}

// Children x_1..x_k with the vertex of interest at position l become
// x_{l+1}, ..., x_k, x_l, x_1, ..., x_{l-1}. Applying it twice is the identity.
void swing(std::vector<TreeNode>& children, std::size_t l) {
  std::vector<TreeNode> out;
  out.reserve(children.size());
  for (std::size_t i = l + 1; i < children.size(); ++i) out.push_back(std::move(children[i]));
  out.push_back(std::move(children[l]));
  for (std::size_t i = 0; i < l; ++i) out.push_back(std::move(children[i]));
  children = std::move(out);
}

std::vector<TreeNode> take_all_but_last(std::vector<TreeNode>& v) {
  std::vector<TreeNode> head(std::make_move_iterator(v.begin()), std::make_move_iterator(v.end() - 1));
  v.erase(v.begin(), v.end() - 1);
  return head;
}

// The exchange shared by both directions of the first case. `upper` is the
// odd vertex owning the rightmost even vertex w, `lower` the odd vertex
// below w. The non-rightmost children of `upper` and the children of
// `lower` swap owners, the three labels are rewritten, and if `lower` hangs
// directly off w the children of w are swung around it.
void exchange(TreeNode& tree, const Path& upper_path, const Path& lower_path, Value upper_label,
              Value w_label, Value lower_label, bool moved_leftmost) {
  const Path w_path = [&] {
    Path p = upper_path;
    p.push_back(at(tree, upper_path).children.size() - 1);
    return p;
  }();
  const bool direct = lower_path.size() == w_path.size() + 1;
  const Path rel(lower_path.begin() + static_cast<std::ptrdiff_t>(w_path.size()), lower_path.end());

  std::vector<TreeNode> from_lower = std::move(at(tree, lower_path).children);
  TreeNode& upper = at(tree, upper_path);
  std::vector<TreeNode> from_upper = take_all_but_last(upper.children);

  TreeNode& w = upper.children.front();
  TreeNode& lower = at(w, rel);
  lower.children = std::move(from_upper);
  lower.label = lower_label;
  if (direct) swing(w.children, rel.front());
  w.label = w_label;
  upper.label = upper_label;

  const auto where = moved_leftmost ? upper.children.end() : upper.children.begin();
  upper.children.insert(where, std::make_move_iterator(from_lower.begin()),
                        std::make_move_iterator(from_lower.end()));
}

MultisetSpec checked_multiset(const TreeNode& t) {
  MultisetSpec m = tree_multiset(t);
  if (TreeCheck c = check_tree(t, m); !c)
    throw InputError(std::string("invalid tree (") + to_string(c.defect) + "): " + c.detail);
  return m;
}

}  // namespace

TreeNode psi(const TreeNode& t, Value j, PsiOptions opts) {
  const MultisetSpec m = checked_multiset(t);
  if (j < 2 || j > m.n()) throw InputError("psi needs 2 <= j <= n");
  if (m.multiplicity(j) < 2) throw InputError("psi needs k_j >= 2");

  TreeNode out = t;
  const Path odd_j = find_odd(out, j);
  const Path odd_prev = find_odd(out, j - 1);
  Path w_path = odd_j;
  w_path.push_back(at(out, odd_j).children.size() - 1);

  if (strictly_below(odd_prev, w_path)) {
    exchange(out, odd_j, odd_prev, j - 1, j - 1, j, opts.moved_vertex_leftmost);
    return out;
  }

  TreeNode& oj = at(out, odd_j);
  TreeNode moved = std::move(oj.children.back());
  oj.children.pop_back();
  moved.label = j - 1;
  auto& dest = at(out, odd_prev).children;
  if (opts.moved_vertex_leftmost)
    dest.insert(dest.begin(), std::move(moved));
  else
    dest.push_back(std::move(moved));
  return out;
}

TreeNode psi_inv(const TreeNode& t, Value j) {
  const MultisetSpec m = checked_multiset(t);
  if (j < 2 || j > m.n()) throw InputError("psi_inv needs 2 <= j <= n");
  if (m.multiplicity(j - 1) < 2) throw InputError("psi_inv needs k_{j-1} >= 2");

  TreeNode out = t;
  const Path odd_prev = find_odd(out, j - 1);
  const Path odd_j = find_odd(out, j);
  Path w_path = odd_prev;
  w_path.push_back(at(out, odd_prev).children.size() - 1);

  if (strictly_below(odd_j, w_path)) {
    exchange(out, odd_prev, odd_j, j, j, j - 1, false);
    return out;
  }

  TreeNode& op = at(out, odd_prev);
  TreeNode moved = std::move(op.children.back());
  op.children.pop_back();
  moved.label = j;
  at(out, odd_j).children.push_back(std::move(moved));
  return out;
}

MultisetSpec reduced_multiset(const MultisetSpec& m) {
  std::vector<int> mult(static_cast<std::size_t>(m.n()), 1);
  mult[0] = m.total() - m.n() + 1;
  return MultisetSpec(std::move(mult));
}

std::vector<Value> psi_schedule(const MultisetSpec& m) {
  std::vector<int> k = m.multiplicities();
  std::vector<Value> steps;
  while (true) {
    Value j = 0;
    for (std::size_t i = k.size(); i-- > 1;)
      if (k[i] >= 2) {
        j = static_cast<Value>(i + 1);
        break;
      }
    if (j == 0) break;
    steps.push_back(j);
    --k[static_cast<std::size_t>(j - 1)];
    ++k[static_cast<std::size_t>(j - 2)];
  }
  return steps;
}

TreeNode big_psi(const TreeNode& t, PsiOptions opts) {
  TreeNode out = t;
  for (Value j : psi_schedule(checked_multiset(t))) out = psi(out, j, opts);
  return out;
}

TreeNode big_psi_inv(const TreeNode& t, const MultisetSpec& target) {
  const MultisetSpec reduced = reduced_multiset(target);
  if (TreeCheck c = check_tree(t, reduced); !c)
    throw InputError("tree is not over {" + reduced.to_string() + "}: " + c.detail);
  const auto steps = psi_schedule(target);
  TreeNode out = t;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out = psi_inv(out, *it);
  return out;
}

Word big_phi(WordView w, PsiOptions opts) {
  return phi(big_psi(phi_inv(w), opts));
}

Word big_phi_inv(WordView w, const MultisetSpec& target) {
  reduced_multiset(target).require(w);
  return phi(big_psi_inv(phi_inv(w), target));
}

Word transport(WordView w, const MultisetSpec& source, const MultisetSpec& target) {
  if (source.n() != target.n() || source.total() != target.total())
    throw InputError("transport needs multisets with the same n and K");
  source.require(w);
  return big_phi_inv(big_phi(w), target);
}

namespace {

bool has_reduced_shape(const MultisetSpec& m) {
  for (Value i = 2; i <= m.n(); ++i)
    if (m.multiplicity(i) != 1) return false;
  return true;
}

}  // namespace

std::vector<Word> max_descent_decompose(WordView w, const MultisetSpec& m) {
  if (!has_reduced_shape(m)) throw InputError("multiset must have the shape (m,1,...,1)");
  m.require(w);
  if (stats(w).des != m.n())
    throw InputError("word must have exactly n = " + std::to_string(m.n()) + " descents");
  if (w.back() != 1) throw InputError("word with n descents must end with 1");
  std::vector<Word> parts(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      if (i + 1 < w.size()) parts.emplace_back();
      continue;
    }
    Word& part = parts.back();
    if (!part.empty() && part.back() <= w[i])
      throw InputError("block " + format_word(part) + " is not decreasing");
    part.push_back(w[i]);
  }
  return parts;
}

int PermTuple::validate() const {
  if (parts.empty()) throw InputError("tuple needs at least one part");
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  std::vector<bool> seen(n + 1, false);
  for (const auto& p : parts)
    for (Value x : p) {
      if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)])
        throw InputError("tuple parts must cover [n] exactly once");
      seen[static_cast<std::size_t>(x)] = true;
    }
  return static_cast<int>(n);
}

int PermTuple::empty_parts() const {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(),
                                        [](const Word& p) { return p.empty(); }));
}

std::string format_tuple(const PermTuple& a) {
  std::string s;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (i) s += '|';
    s += format_word(a.parts[i]);
  }
  return s;
}

PermTuple parse_tuple(std::string_view text) {
  PermTuple a;
  std::size_t pos = 0;
  while (true) {
    const std::size_t bar = text.find('|', pos);
    a.parts.push_back(parse_word(text.substr(pos, bar == std::string_view::npos ? bar : bar - pos)));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return a;
}

namespace {

void insert_values(PermTuple& a, Value v, int n, int part_with_one,
                   const std::function<void(const PermTuple&)>& visit) {
  if (v > n) {
    visit(a);
    return;
  }
  const bool pinned = v == 1 && part_with_one >= 1 && part_with_one <= static_cast<int>(a.parts.size());
  for (std::size_t p = 0; p < a.parts.size(); ++p) {
    if (pinned && static_cast<int>(p) != part_with_one - 1) continue;
    Word& part = a.parts[p];
    for (std::size_t pos = 0; pos <= part.size(); ++pos) {
      part.insert(part.begin() + static_cast<std::ptrdiff_t>(pos), v);
      insert_values(a, v + 1, n, part_with_one, visit);
      a.parts[p].erase(a.parts[p].begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }
}

}  // namespace

void for_each_tuple(int m, int n, int part_with_one,
                    const std::function<void(const PermTuple&)>& visit) {
  if (m < 1 || n < 0) return;
  PermTuple a;
  a.parts.resize(static_cast<std::size_t>(m));
  insert_values(a, 1, n, part_with_one, visit);
}

Word zeta(const PermTuple& a) {
  a.validate();
  const Word& first = a.parts.front();
  const auto one = std::find(first.begin(), first.end(), 1);
  if (one == first.end()) throw InputError("zeta needs 1 in the first part");
  Word out(first.begin(), one);
  out.push_back(1);
  for (std::size_t i = 1; i < a.parts.size(); ++i) {
    out.insert(out.end(), a.parts[i].begin(), a.parts[i].end());
    out.push_back(1);
  }
  out.insert(out.end(), one + 1, first.end());
  return out;
}

PermTuple zeta_inv(WordView w, const MultisetSpec& m) {
  if (!has_reduced_shape(m)) throw InputError("multiset must have the shape (m,1,...,1)");
  m.require(w);
  std::vector<Word> stretches(1);
  for (Value x : w) {
    if (x == 1)
      stretches.emplace_back();
    else
      stretches.back().push_back(x);
  }
  // stretches = s_0, s_1, ..., s_m around the m ones.
  PermTuple a;
  Word first = stretches.front();
  first.push_back(1);
  first.insert(first.end(), stretches.back().begin(), stretches.back().end());
  a.parts.push_back(std::move(first));
  for (std::size_t i = 1; i + 1 < stretches.size(); ++i) a.parts.push_back(std::move(stretches[i]));
  return a;
}

}  // namespace qsp
