#include "qsp/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qsp {

MultisetSpec::MultisetSpec(std::vector<int> mult) : mult_(std::move(mult)) {
  if (mult_.empty()) throw InputError("multiset needs at least one value");
  for (int k : mult_)
    if (k < 1) throw InputError("multiplicities must be positive");
  total_ = std::accumulate(mult_.begin(), mult_.end(), 0);
}

MultisetSpec MultisetSpec::of_word(WordView w) {
  if (w.empty()) throw InputError("cannot infer a multiset from the empty word");
  const Value top = *std::max_element(w.begin(), w.end());
  std::vector<int> mult(static_cast<std::size_t>(std::max(top, 0)), 0);
  for (Value x : w) {
    if (x < 1) throw InputError("word values must be positive");
    ++mult[static_cast<std::size_t>(x - 1)];
  }
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] == 0)
      throw InputError("value " + std::to_string(i + 1) + " is missing from the word");
  return MultisetSpec(std::move(mult));
}

MultisetSpec MultisetSpec::parse(std::string_view text) {
  return MultisetSpec(parse_int_list(text));
}

bool MultisetSpec::admits(WordView w) const {
  if (static_cast<int>(w.size()) != total_) return false;
  std::vector<int> seen(mult_.size(), 0);
  for (Value x : w) {
    if (x < 1 || x > n()) return false;
    if (++seen[static_cast<std::size_t>(x - 1)] > mult_[static_cast<std::size_t>(x - 1)])
      return false;
  }
  return true;
}

void MultisetSpec::require(WordView w) const {
  if (!admits(w))
    throw InputError("word " + format_word(w) + " is not a permutation of {" + to_string() + "}");
}

std::string MultisetSpec::to_string() const { return format_word(mult_); }

StatTriple stats(WordView w) {
  StatTriple s;
  if (w.empty()) return s;
  Value prev = 0;
  auto classify = [&s](Value a, Value b) {
    if (a < b)
      ++s.asc;
    else if (a > b)
      ++s.des;
    else
      ++s.plat;
  };
  for (Value x : w) {
    classify(prev, x);
    prev = x;
  }
  classify(prev, 0);
  return s;
}

namespace {

// Open-value stack recognizer. A value that has been seen and still has
// occurrences left must be on top of the stack when it reappears.
class CrossingTracker {
 public:
  enum class Step { none, opened, closed };

  CrossingTracker(Value lo, std::vector<int> remaining)
      : lo_(lo), remaining_(std::move(remaining)), started_(remaining_.size(), false) {}

  bool can_place(Value x) const {
    const auto i = index(x);
    if (remaining_[i] == 0) return false;
    return !started_[i] || (!open_.empty() && open_.back() == x);
  }

  Step place(Value x) {
    const auto i = index(x);
    --remaining_[i];
    if (!started_[i]) {
      started_[i] = true;
      if (remaining_[i] > 0) {
        open_.push_back(x);
        return Step::opened;
      }
      return Step::none;
    }
    if (remaining_[i] == 0) {
      open_.pop_back();
      return Step::closed;
    }
    return Step::none;
  }

  // Undoes the most recent place(x), which reported `step` and was the first
  // occurrence of x iff `first`.
  void unplace(Value x, Step step, bool first) {
    const auto i = index(x);
    ++remaining_[i];
    if (step == Step::opened) open_.pop_back();
    if (step == Step::closed) open_.push_back(x);
    if (first) started_[i] = false;
  }

  bool started(Value x) const { return started_[index(x)]; }

 private:
  std::size_t index(Value x) const { return static_cast<std::size_t>(x - lo_); }

  Value lo_;
  std::vector<int> remaining_;
  std::vector<bool> started_;
  std::vector<Value> open_;
};

void qs_recurse(const MultisetSpec& m, CrossingTracker& tracker, Word& prefix,
                const std::function<void(const Word&)>& visit) {
  if (static_cast<int>(prefix.size()) == m.total()) {
    visit(prefix);
    return;
  }
  for (Value x = 1; x <= m.n(); ++x) {
    if (!tracker.can_place(x)) continue;
    const bool first = !tracker.started(x);
    const auto step = tracker.place(x);
    prefix.push_back(x);
    qs_recurse(m, tracker, prefix, visit);
    prefix.pop_back();
    tracker.unplace(x, step, first);
  }
}

CrossingTracker tracker_for(const MultisetSpec& m) { return CrossingTracker(1, m.multiplicities()); }

}  // namespace

bool is_quasi_stirling(WordView w) {
  if (w.empty()) return true;
  const auto [lo_it, hi_it] = std::minmax_element(w.begin(), w.end());
  const Value lo = *lo_it;
  std::vector<int> counts(static_cast<std::size_t>(*hi_it - lo + 1), 0);
  for (Value x : w) ++counts[static_cast<std::size_t>(x - lo)];
  CrossingTracker tracker(lo, counts);
  for (Value x : w) {
    if (!tracker.can_place(x)) return false;
    tracker.place(x);
  }
  return true;
}

bool is_stirling(WordView w) {
  // For each value, everything between its first and last occurrence must be >= it,
  // with equality only for the value itself.
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t last = i;
    for (std::size_t k = w.size(); k-- > i + 1;)
      if (w[k] == w[i]) {
        last = k;
        break;
      }
    for (std::size_t j = i + 1; j < last; ++j)
      if (w[j] < w[i]) return false;
  }
  return true;
}

void for_each_qs(const MultisetSpec& m, const std::function<void(const Word&)>& visit) {
  CrossingTracker tracker = tracker_for(m);
  Word prefix;
  prefix.reserve(static_cast<std::size_t>(m.total()));
  qs_recurse(m, tracker, prefix, visit);
}

void for_each_qs(const MultisetSpec& m, Value first,
                 const std::function<void(const Word&)>& visit) {
  if (first < 1 || first > m.n()) return;
  CrossingTracker tracker = tracker_for(m);
  Word prefix{first};
  prefix.reserve(static_cast<std::size_t>(m.total()));
  tracker.place(first);
  qs_recurse(m, tracker, prefix, visit);
}

std::vector<Word> enumerate_qs(const MultisetSpec& m) {
  std::vector<Word> out;
  for_each_qs(m, [&out](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_permutation(const MultisetSpec& m, const std::function<void(const Word&)>& visit) {
  Word w;
  w.reserve(static_cast<std::size_t>(m.total()));
  for (Value i = 1; i <= m.n(); ++i) w.insert(w.end(), static_cast<std::size_t>(m.multiplicity(i)), i);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

PolyTUV stat_monomial(const StatTriple& s) {
  return PolyTUV::monomial({s.des, s.asc, s.plat});
}

PolyTUV qs_polynomial(const MultisetSpec& m) {
  PolyTUV p;
  for_each_qs(m, [&p](const Word& w) {
    const StatTriple s = stats(w);
    p.add_term({s.des, s.asc, s.plat}, 1);
  });
  return p;
}

Word complement(WordView w, int n) {
  Word out;
  out.reserve(w.size());
  for (Value x : w) {
    if (x < 1 || x > n)
      throw InputError("value " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    out.push_back(n + 1 - x);
  }
  return out;
}

namespace {

void compose(int remaining, int parts, std::vector<int>& prefix, std::vector<MultisetSpec>& out) {
  if (parts == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  for (int k = 1; k <= remaining - (parts - 1); ++k) {
    prefix.push_back(k);
    compose(remaining - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultisetSpec> compositions(int K, int n) {
  std::vector<MultisetSpec> out;
  if (n < 1 || K < n) return out;
  std::vector<int> prefix;
  compose(K, n, prefix, out);
  return out;
}

std::vector<MultisetSpec> multisets_up_to(int max_K) {
  std::vector<MultisetSpec> out;
  for (int K = 1; K <= max_K; ++K)
    for (int n = 1; n <= K; ++n) {
      auto part = compositions(K, n);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

std::string format_word(WordView w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(std::string_view text) { return parse_int_list(text); }

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last || item.front() == '-' || item.front() == '+')
      throw InputError("malformed integer list: '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace qsp
