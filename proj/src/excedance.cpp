#include "qsp/excedance.hpp"

#include <algorithm>

namespace qsp {

PartialInj::PartialInj(int n, std::vector<Value> values) : n_(n), values_(std::move(values)) {
  if (n_ < 1) throw InputError("partial injection needs n >= 1");
  if (static_cast<int>(values_.size()) >= n_)
    throw InputError("partial injection needs r >= 1 (length below n)");
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (Value x : values_) {
    if (x < 1 || x > n_) throw InputError("partial injection value outside [1,n]");
    if (seen[static_cast<std::size_t>(x)]) throw InputError("partial injection values must be distinct");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

int exc(const PartialInj& s) {
  int e = 0;
  for (std::size_t i = 0; i < s.values().size(); ++i)
    if (s.values()[i] > static_cast<Value>(i + 1)) ++e;
  return e;
}

PathCycleRep to_path_cycle(const PartialInj& s) {
  const int n = s.codomain();
  const int dom = s.domain();
  std::vector<Value> preimage(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= dom; ++i) preimage[static_cast<std::size_t>(s.values()[i - 1])] = i;

  PathCycleRep rep;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (Value end = dom + 1; end <= n; ++end) {
    Word path{end};
    used[static_cast<std::size_t>(end)] = true;
    for (Value x = preimage[static_cast<std::size_t>(end)]; x != 0;
         x = preimage[static_cast<std::size_t>(x)]) {
      path.push_back(x);
      used[static_cast<std::size_t>(x)] = true;
    }
    std::reverse(path.begin(), path.end());
    rep.paths.push_back(std::move(path));
  }
  for (Value start = 1; start <= dom; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    Word cycle;
    Value x = start;
    do {
      cycle.push_back(x);
      used[static_cast<std::size_t>(x)] = true;
      x = s.values()[static_cast<std::size_t>(x - 1)];
    } while (x != start);
    rep.cycles.push_back(std::move(cycle));
  }
  std::reverse(rep.cycles.begin(), rep.cycles.end());
  return rep;
}

PartialInj from_path_cycle(const PathCycleRep& rep) {
  std::size_t n = 0;
  for (const auto& p : rep.paths) n += p.size();
  for (const auto& c : rep.cycles) n += c.size();
  const std::size_t r = rep.paths.size();
  if (r == 0) throw InputError("representation needs at least one path");
  const std::size_t dom = n - r;

  std::vector<bool> seen(n + 1, false);
  auto mark = [&](Value x) {
    if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)])
      throw InputError("representation entries must be exactly 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(x)] = true;
  };
  auto in_domain = [&](Value x) { return static_cast<std::size_t>(x) <= dom; };

  std::vector<Value> values(dom, 0);
  for (const auto& p : rep.paths) {
    if (p.empty()) throw InputError("empty path");
    for (std::size_t i = 0; i < p.size(); ++i) {
      mark(p[i]);
      const bool last = i + 1 == p.size();
      if (last != !in_domain(p[i]))
        throw InputError("path must end at, and only at, an index outside the domain");
      if (!last) values[static_cast<std::size_t>(p[i] - 1)] = p[i + 1];
    }
  }
  for (const auto& c : rep.cycles) {
    if (c.empty()) throw InputError("empty cycle");
    for (std::size_t i = 0; i < c.size(); ++i) {
      mark(c[i]);
      if (!in_domain(c[i])) throw InputError("cycle entry outside the domain");
      values[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
    }
  }
  return PartialInj(static_cast<int>(n), std::move(values));
}

bool is_standard(const PathCycleRep& rep) {
  for (std::size_t i = 0; i < rep.paths.size(); ++i) {
    if (rep.paths[i].empty()) return false;
    if (i > 0 && rep.paths[i - 1].back() >= rep.paths[i].back()) return false;
  }
  for (std::size_t i = 0; i < rep.cycles.size(); ++i) {
    const Word& c = rep.cycles[i];
    if (c.empty() || *std::min_element(c.begin(), c.end()) != c.front()) return false;
    if (i > 0 && rep.cycles[i - 1].front() <= c.front()) return false;
  }
  return true;
}

int path_cycle_excedances(const PathCycleRep& rep) {
  int e = 0;
  for (const auto& p : rep.paths) e += stats(p).asc - 1;
  for (const auto& c : rep.cycles) e += stats(c).asc - 1;
  return e;
}

std::string render_path_cycle(const PathCycleRep& rep) {
  std::string s;
  for (const auto& p : rep.paths) s += "<" + format_word(p) + ">";
  for (const auto& c : rep.cycles) s += "(" + format_word(c) + ")";
  return s;
}

PathCycleRep parse_path_cycle(std::string_view text) {
  PathCycleRep rep;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char open = text[pos];
    const char close = open == '<' ? '>' : open == '(' ? ')' : '\0';
    if (close == '\0') throw InputError("expected '<' or '(' in path/cycle notation");
    const std::size_t end = text.find(close, pos + 1);
    if (end == std::string_view::npos) throw InputError("unterminated group in path/cycle notation");
    Word group = parse_word(text.substr(pos + 1, end - pos - 1));
    if (group.empty()) throw InputError("empty group in path/cycle notation");
    (open == '<' ? rep.paths : rep.cycles).push_back(std::move(group));
    pos = end + 1;
  }
  return rep;
}

std::string format_partial_inj(const PartialInj& s) {
  return std::to_string(s.codomain()) + ":" + format_word(s.values());
}

PartialInj parse_partial_inj(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("partial injection must look like n:v1,v2,...");
  const auto head = parse_int_list(text.substr(0, colon));
  if (head.size() != 1) throw InputError("partial injection needs a single codomain size");
  return PartialInj(head.front(), parse_word(text.substr(colon + 1)));
}

namespace {

bool distinct_below_top(const MultisetSpec& m) {
  for (Value i = 1; i < m.n(); ++i)
    if (m.multiplicity(i) != 1) return false;
  return true;
}

bool distinct_above_one(const MultisetSpec& m) {
  for (Value i = 2; i <= m.n(); ++i)
    if (m.multiplicity(i) != 1) return false;
  return true;
}

}  // namespace

PartialInj chi(WordView w, const MultisetSpec& m) {
  if (!distinct_below_top(m)) throw InputError("chi needs a multiset of the shape (1,...,1,m)");
  m.require(w);
  if (!is_quasi_stirling(w)) throw InputError("chi needs a quasi-Stirling permutation");
  const Value top = m.n();
  const std::size_t split =
      static_cast<std::size_t>(std::find(w.rbegin(), w.rend(), top).base() - w.begin());

  PathCycleRep rep;
  Value next_terminal = top;
  Word current;
  for (std::size_t i = 0; i < split; ++i) {
    if (w[i] == top) {
      current.push_back(next_terminal++);
      rep.paths.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(w[i]);
    }
  }
  for (std::size_t i = split; i < w.size(); ++i) {
    if (rep.cycles.empty() || w[i] < rep.cycles.back().front())
      rep.cycles.push_back(Word{w[i]});
    else
      rep.cycles.back().push_back(w[i]);
  }
  // Left-to-right minima open cycles in decreasing order, as required.
  return from_path_cycle(rep);
}

Word chi_inv(const PartialInj& s) {
  const PathCycleRep rep = to_path_cycle(s);
  const Value top = s.domain() + 1;
  Word w;
  for (const auto& p : rep.paths)
    for (Value x : p) w.push_back(std::min(x, top));
  for (const auto& c : rep.cycles) w.insert(w.end(), c.begin(), c.end());
  return w;
}

PartialInj delta(WordView w, const MultisetSpec& m) {
  if (!distinct_above_one(m)) throw InputError("delta needs a multiset of the shape (m,1,...,1)");
  m.require(w);
  std::vector<int> flipped(m.multiplicities().rbegin(), m.multiplicities().rend());
  return chi(complement(w, m.n()), MultisetSpec(std::move(flipped)));
}

Word delta_inv(const PartialInj& s) { return complement(chi_inv(s), s.domain() + 1); }

namespace {

void extend_injection(int n, std::size_t length, std::vector<Value>& prefix, std::vector<bool>& used,
                      const std::function<void(const PartialInj&)>& visit) {
  if (prefix.size() == length) {
    visit(PartialInj(n, prefix));
    return;
  }
  for (Value x = 1; x <= n; ++x) {
    if (used[static_cast<std::size_t>(x)]) continue;
    used[static_cast<std::size_t>(x)] = true;
    prefix.push_back(x);
    extend_injection(n, length, prefix, used, visit);
    prefix.pop_back();
    used[static_cast<std::size_t>(x)] = false;
  }
}

}  // namespace

void for_each_partial_inj(int n, int r, const std::function<void(const PartialInj&)>& visit) {
  if (n < 1 || r < 1 || r > n) throw InputError("J_{n,r} needs 1 <= r <= n");
  std::vector<Value> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  extend_injection(n, static_cast<std::size_t>(n - r), prefix, used, visit);
}

std::vector<PartialInj> enumerate_J(int n, int r) {
  std::vector<PartialInj> out;
  for_each_partial_inj(n, r, [&out](const PartialInj& s) { out.push_back(s); });
  return out;
}

}  // namespace qsp
