#include "qsp/verify.hpp"

#include "qsp/excedance.hpp"
#include "qsp/genfun.hpp"
#include "qsp/trees.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace qsp {

namespace {

// Collects mismatches, keeping the first description for the report.
class Tally {
 public:
  Tally(std::string family, std::string subject) {
    r_.family = std::move(family);
    r_.subject = std::move(subject);
  }

  void count(std::uint64_t n = 1) { r_.cases += n; }

  void expect(bool ok, const std::function<std::string()>& what) {
    if (ok) return;
    if (r_.mismatches++ == 0) first_ = what();
  }

  CheckResult done(std::string detail = {}) {
    r_.detail = r_.mismatches ? first_ : std::move(detail);
    return r_;
  }

 private:
  CheckResult r_;
  std::string first_;
};

std::string poly_note(const PolyTUV& a, const PolyTUV& b) {
  return poly_to_string(a) + " vs " + poly_to_string(b);
}

MultisetSpec top_heavy(int n, int m) {
  std::vector<int> k(static_cast<std::size_t>(n), 1);
  k.back() = m;
  return MultisetSpec(std::move(k));
}

MultisetSpec bottom_heavy(int n, int m) {
  std::vector<int> k(static_cast<std::size_t>(n), 1);
  k.front() = m;
  return MultisetSpec(std::move(k));
}

std::string mn_subject(int m, int n) { return "m=" + std::to_string(m) + ",n=" + std::to_string(n); }

std::uint64_t count_qs(const MultisetSpec& m) {
  std::uint64_t c = 0;
  for_each_qs(m, [&c](const Word&) { ++c; });
  return c;
}

bool unique_odd_vertices(const TreeNode& t, int n) {
  std::vector<int> odd(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(const TreeNode&, int)> walk = [&](const TreeNode& v, int level) {
    if (level % 2 == 1 && v.label >= 1 && v.label <= n) ++odd[static_cast<std::size_t>(v.label)];
    for (const auto& c : v.children) walk(c, level + 1);
  };
  walk(t, 0);
  for (int i = 1; i <= n; ++i)
    if (odd[static_cast<std::size_t>(i)] != 1) return false;
  return true;
}

}  // namespace

CheckResult check_enumeration(const MultisetSpec& m) {
  Tally tally("enumerate", m.to_string());
  std::vector<Word> filtered;
  for_each_permutation(m, [&](const Word& w) {
    tally.count();
    if (is_quasi_stirling(w)) filtered.push_back(w);
  });
  const auto listed = enumerate_qs(m);
  tally.expect(listed == filtered, [&] {
    return "enumerate_qs gave " + std::to_string(listed.size()) + " words, filter gave " +
           std::to_string(filtered.size());
  });
  return tally.done(std::to_string(listed.size()) + " words");
}

CheckResult check_trees(const MultisetSpec& m) {
  Tally tally("trees", m.to_string());
  std::set<std::string> seen;
  for_each_tree(m, [&](const TreeNode& t) {
    tally.count();
    const std::string text = render_tree(t);
    tally.expect(validate_tree(t, m), [&] { return "invalid tree " + text; });
    tally.expect(unique_odd_vertices(t, m.n()), [&] { return "repeated odd label in " + text; });
    tally.expect(vertex_count(t) == static_cast<std::size_t>(m.total()) + 1,
                 [&] { return "wrong vertex count in " + text; });
    tally.expect(parse_tree(text) == t, [&] { return "text round trip failed for " + text; });
    tally.expect(seen.insert(text).second, [&] { return "duplicate tree " + text; });
  });
  const std::uint64_t words = count_qs(m);
  tally.expect(seen.size() == words, [&] {
    return std::to_string(seen.size()) + " trees vs " + std::to_string(words) + " words";
  });
  return tally.done(std::to_string(seen.size()) + " trees");
}

CheckResult check_thm22(const MultisetSpec& m) {
  Tally tally("thm22", m.to_string());
  std::set<Word> images;
  for_each_tree(m, [&](const TreeNode& t) {
    tally.count();
    const Word w = phi(t);
    const std::string text = render_tree(t);
    tally.expect(m.admits(w) && is_quasi_stirling(w),
                 [&] { return "phi(" + text + ") = " + format_word(w) + " is not in the word set"; });
    const TreeStats ts = tree_stats(t);
    const StatTriple ws = stats(w);
    const bool same = ts.cdes == ws.des && ts.casc == ws.asc && ts.eleaf == ws.plat &&
                      ts.first == std::optional<Value>(w.front()) &&
                      ts.last == std::optional<Value>(w.back());
    tally.expect(same, [&] { return "statistics differ for " + text; });
    tally.expect(phi_inv(w) == t, [&] { return "phi_inv(phi(" + text + ")) differs"; });
    tally.expect(images.insert(w).second, [&] { return "phi not injective at " + text; });
  });
  std::uint64_t words = 0;
  for_each_qs(m, [&](const Word& w) {
    ++words;
    tally.expect(phi(phi_inv(w)) == w, [&] { return "phi(phi_inv(" + format_word(w) + ")) differs"; });
  });
  tally.expect(images.size() == words, [&] {
    return std::to_string(images.size()) + " images vs " + std::to_string(words) + " words";
  });
  return tally.done(std::to_string(words) + " trees");
}

CheckResult check_thm23(const MultisetSpec& m, PsiOptions opts) {
  Tally tally("thm23", m.to_string());
  int maps = 0;
  for (Value j = 2; j <= m.n(); ++j) {
    if (m.multiplicity(j) < 2) continue;
    ++maps;
    std::vector<int> k = m.multiplicities();
    --k[static_cast<std::size_t>(j - 1)];
    ++k[static_cast<std::size_t>(j - 2)];
    const MultisetSpec target(std::move(k));
    std::set<std::string> images;
    for_each_tree(m, [&](const TreeNode& t) {
      tally.count();
      const TreeNode s = psi(t, j, opts);
      const std::string text = render_tree(t);
      const std::string label = "psi_" + std::to_string(j) + "(" + text + ")";
      tally.expect(validate_tree(s, target), [&] { return label + " is not over {" + target.to_string() + "}"; });
      const TreeStats a = tree_stats(t);
      const TreeStats b = tree_stats(s);
      tally.expect(a.cdes == b.cdes && a.casc == b.casc && a.eleaf == b.eleaf,
                   [&] { return label + " changes (cdes,casc,eleaf)"; });
      tally.expect(psi_inv(s, j) == t, [&] { return "psi_inv undoes " + label + " incorrectly"; });
      tally.expect(images.insert(render_tree(s)).second, [&] { return label + " collides"; });
    });
    std::uint64_t targets = 0;
    for_each_tree(target, [&](const TreeNode& s) {
      ++targets;
      tally.expect(psi(psi_inv(s, j), j, opts) == s,
                   [&] { return "psi_" + std::to_string(j) + " fails to undo psi_inv on " + render_tree(s); });
    });
    tally.expect(images.size() == targets, [&] {
      return "psi_" + std::to_string(j) + ": " + std::to_string(images.size()) + " images vs " +
             std::to_string(targets) + " targets";
    });
  }
  return tally.done(std::to_string(maps) + " admissible j");
}

CheckResult check_thm11(const MultisetSpec& m, PsiOptions opts) {
  Tally tally("thm11", m.to_string());
  const MultisetSpec reduced = reduced_multiset(m);
  std::set<Word> images;
  std::uint64_t words = 0;
  std::uint64_t first_kept = 0;
  std::uint64_t last_kept = 0;
  for_each_qs(m, [&](const Word& w) {
    ++words;
    tally.count();
    const Word v = big_phi(w, opts);
    const std::string text = format_word(w);
    tally.expect(reduced.admits(v) && is_quasi_stirling(v),
                 [&] { return "Phi(" + text + ") = " + format_word(v) + " is outside the reduced set"; });
    tally.expect(stats(v) == stats(w), [&] { return "Phi(" + text + ") changes (asc,des,plat)"; });
    bool inverted = false;
    try {
      inverted = big_phi_inv(v, m) == w;
    } catch (const InputError&) {
    }
    tally.expect(inverted, [&] { return "Phi_inv does not undo Phi at " + text; });
    tally.expect(images.insert(v).second, [&] { return "Phi not injective at " + text; });
    if (!v.empty() && v.front() == w.front()) ++first_kept;
    if (!v.empty() && v.back() == w.back()) ++last_kept;
  });
  const std::uint64_t targets = count_qs(reduced);
  tally.expect(images.size() == targets, [&] {
    return std::to_string(images.size()) + " images vs " + std::to_string(targets) + " targets";
  });
  return tally.done("first kept " + std::to_string(first_kept) + "/" + std::to_string(words) +
                    ", last kept " + std::to_string(last_kept) + "/" + std::to_string(words));
}

CheckResult check_thm12(int K, int n, bool with_transport) {
  Tally tally("thm12", "K=" + std::to_string(K) + ",n=" + std::to_string(n));
  const auto family = compositions(K, n);
  std::vector<PolyTUV> polys;
  for (const auto& m : family) polys.push_back(qs_polynomial(m));
  for (std::size_t i = 1; i < family.size(); ++i) {
    tally.count();
    tally.expect(polys[i] == polys[0], [&] {
      return "{" + family[i].to_string() + "} vs {" + family[0].to_string() + "}: " +
             poly_note(polys[i], polys[0]);
    });
  }
  if (with_transport) {
    for (const auto& src : family) {
      const auto words = enumerate_qs(src);
      for (const auto& dst : family) {
        std::set<Word> images;
        for (const Word& w : words) {
          tally.count();
          const Word v = transport(w, src, dst);
          tally.expect(dst.admits(v) && is_quasi_stirling(v) && stats(v) == stats(w), [&] {
            return "transport " + format_word(w) + " to {" + dst.to_string() + "} gave " + format_word(v);
          });
          images.insert(v);
          if (src == dst)
            tally.expect(v == w, [&] { return "transport to the same multiset moved " + format_word(w); });
        }
        tally.expect(images.size() == words.size(), [&] {
          return "transport {" + src.to_string() + "} -> {" + dst.to_string() + "} not injective";
        });
      }
    }
  }
  return tally.done(std::to_string(family.size()) + " compositions");
}

CheckResult check_thm13(const MultisetSpec& m) {
  Tally tally("thm13", m.to_string());
  const int K = m.total();
  const int n = m.n();
  const MultisetSpec reduced = reduced_multiset(m);
  std::map<int, std::uint64_t> by_des;
  std::set<std::vector<Value>> images;
  for_each_qs(m, [&](const Word& w) {
    tally.count();
    const int des = stats(w).des;
    ++by_des[des - 1];
    const PartialInj s = delta(big_phi(w), reduced);
    tally.expect(s.codomain() == K && s.unused() == K - n + 1,
                 [&] { return "delta(Phi(" + format_word(w) + ")) lands outside J"; });
    tally.expect(exc(s) == des - 1, [&] { return "exc differs from des-1 at " + format_word(w); });
    images.insert(s.values());
  });
  std::map<int, std::uint64_t> by_exc;
  for_each_partial_inj(K, K - n + 1, [&](const PartialInj& s) {
    tally.count();
    ++by_exc[exc(s)];
  });
  tally.expect(by_des == by_exc, [&] { return std::string("des-1 and exc histograms differ"); });
  std::uint64_t total = 0;
  for (const auto& [d, c] : by_exc) total += c;
  tally.expect(images.size() == total, [&] { return std::string("delta . Phi is not a bijection onto J"); });
  return tally.done(std::to_string(by_exc.size()) + " excedance classes");
}

CheckResult check_coro14(const MultisetSpec& m) {
  Tally tally("coro14", m.to_string());
  std::uint64_t got = 0;
  for_each_qs(m, [&](const Word& w) {
    tally.count();
    if (stats(w).des == m.n()) ++got;
  });
  const BigInt expected = max_descent_count(m);
  tally.expect(BigInt(got) == expected,
               [&] { return "expected " + expected.str() + ", got " + std::to_string(got); });

  const MultisetSpec reduced = reduced_multiset(m);
  std::uint64_t decomposed = 0;
  for_each_qs(reduced, [&](const Word& w) {
    if (stats(w).des != reduced.n()) return;
    tally.count();
    bool ok = false;
    try {
      Word rebuilt;
      for (const Word& part : max_descent_decompose(w, reduced)) {
        rebuilt.insert(rebuilt.end(), part.begin(), part.end());
        rebuilt.push_back(1);
      }
      ok = rebuilt == w;
    } catch (const InputError&) {
    }
    tally.expect(ok, [&] { return "cannot decompose " + format_word(w); });
    ++decomposed;
  });
  tally.expect(BigInt(decomposed) == expected, [&] {
    return "reduced multiset has " + std::to_string(decomposed) + " words with n descents, expected " +
           expected.str();
  });
  return tally.done("expected " + expected.str() + ", got " + std::to_string(got));
}

CheckResult check_coro15(const MultisetSpec& m) {
  Tally tally("coro15", m.to_string());
  tally.count();
  const PolyTUV formula = corollary2_poly(m);
  const PolyTUV brute = qs_polynomial(m);
  tally.expect(formula == brute, [&] { return poly_note(formula, brute); });
  return tally.done(std::to_string(brute.size()) + " monomials");
}

CheckResult check_eq2(const MultisetSpec& m, int order) {
  Tally tally("eq2", m.to_string());
  const SeriesComparison c = eq2_series_check(m, order);
  for (int i = 0; i <= order; ++i) {
    tally.count();
    tally.expect(c.closed_form[static_cast<std::size_t>(i)] == c.via_polynomial[static_cast<std::size_t>(i)], [&] {
      return "coefficient " + std::to_string(i) + ": " +
             rational_to_string(c.closed_form[static_cast<std::size_t>(i)]) + " vs " +
             rational_to_string(c.via_polynomial[static_cast<std::size_t>(i)]);
    });
  }
  return tally.done("order " + std::to_string(order));
}

CheckResult check_eq4(int n) {
  Tally tally("eq4", "n=" + std::to_string(n));
  for (int r = 1; r <= n; ++r)
    for_each_partial_inj(n, r, [&](const PartialInj& s) {
      tally.count();
      const PathCycleRep rep = to_path_cycle(s);
      const std::string text = format_partial_inj(s);
      tally.expect(is_standard(rep), [&] { return "non-standard form for " + text; });
      tally.expect(from_path_cycle(rep) == s, [&] { return "path/cycle round trip failed for " + text; });
      tally.expect(parse_path_cycle(render_path_cycle(rep)) == rep,
                   [&] { return "path/cycle text round trip failed for " + text; });
      tally.expect(path_cycle_excedances(rep) == exc(s), [&] { return "excedance formula fails for " + text; });
    });
  return tally.done();
}

namespace {

CheckResult check_onto_J(const char* family, int n, int m, bool use_delta) {
  Tally tally(family, mn_subject(m, n));
  const MultisetSpec ms = use_delta ? bottom_heavy(n, m) : top_heavy(n, m);
  std::set<std::vector<Value>> images;
  for_each_qs(ms, [&](const Word& w) {
    tally.count();
    const PartialInj s = use_delta ? delta(w, ms) : chi(w, ms);
    const StatTriple st = stats(w);
    const int stat = use_delta ? st.des : st.asc;
    tally.expect(s.codomain() == n + m - 1 && s.unused() == m,
                 [&] { return format_word(w) + " maps outside J"; });
    tally.expect(stat == exc(s) + 1, [&] { return "statistic relation fails at " + format_word(w); });
    tally.expect((use_delta ? delta_inv(s) : chi_inv(s)) == w, [&] { return "inverse fails at " + format_word(w); });
    images.insert(s.values());
  });
  const BigInt size = factorial(n + m - 1) / factorial(m);
  tally.expect(BigInt(images.size()) == size, [&] {
    return std::to_string(images.size()) + " images vs |J| = " + size.str();
  });
  return tally.done();
}

}  // namespace

CheckResult check_chi(int n, int m) { return check_onto_J("chi", n, m, false); }
CheckResult check_delta(int n, int m) { return check_onto_J("delta", n, m, true); }

CheckResult check_eq5(int m, int n) {
  Tally tally("eq5", mn_subject(m, n));
  tally.count();
  const PolyTUV brute = tuple_polynomial(m, n, 0);
  const PolyTUV formula = tuple_formula(m, n);
  tally.expect(brute == formula, [&] { return poly_note(brute, formula); });
  return tally.done();
}

CheckResult check_eq6(int m, int n) {
  Tally tally("eq6", mn_subject(m, n));
  const PolyTUV first = tuple_polynomial(m, n, 1);
  for (int j = 2; j <= m; ++j) {
    tally.count();
    const PolyTUV other = tuple_polynomial(m, n, j);
    tally.expect(other == first, [&] { return "P^" + std::to_string(j) + " differs from P^1"; });
  }
  return tally.done();
}

CheckResult check_eq7(int m, int n) {
  Tally tally("eq7", mn_subject(m, n));
  tally.count();
  const PolyTUV brute = p1_polynomial(m, n);
  const PolyTUV formula = p1_formula(m, n);
  const PolyTUV words = qs_polynomial(bottom_heavy(n, m));
  tally.expect(brute == formula, [&] { return "tuples vs formula: " + poly_note(brute, formula); });
  tally.expect(brute == words, [&] { return "tuples vs words: " + poly_note(brute, words); });
  return tally.done();
}

CheckResult check_zeta(int m, int n) {
  Tally tally("zeta", mn_subject(m, n));
  const MultisetSpec ms = bottom_heavy(n, m);
  std::set<Word> images;
  for_each_tuple(m, n, 1, [&](const PermTuple& a) {
    tally.count();
    const Word w = zeta(a);
    const std::string text = format_tuple(a);
    tally.expect(ms.admits(w) && is_quasi_stirling(w), [&] { return "zeta(" + text + ") outside the word set"; });
    StatTriple sum;
    for (const auto& part : a.parts) {
      const StatTriple s = stats(part);
      sum.asc += s.asc;
      sum.des += s.des;
    }
    const StatTriple s = stats(w);
    tally.expect(s.plat == a.empty_parts() && s.asc == sum.asc && s.des == sum.des,
                 [&] { return "additive statistics fail for " + text; });
    tally.expect(zeta_inv(w, ms) == a, [&] { return "zeta_inv fails for " + text; });
    images.insert(w);
  });
  const std::uint64_t words = count_qs(ms);
  tally.expect(images.size() == words, [&] {
    return std::to_string(images.size()) + " images vs " + std::to_string(words) + " words";
  });
  return tally.done();
}

bool SuiteReport::pass() const {
  for (const auto& f : families)
    if (!f.pass()) return false;
  return true;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_k"] = max_K;
  j["pass"] = pass();
  auto fams = nlohmann::ordered_json::array();
  for (const auto& f : families) {
    nlohmann::ordered_json o;
    o["check"] = f.family;
    o["pass"] = f.pass();
    o["subjects"] = f.subjects;
    o["cases"] = f.cases;
    o["mismatches"] = f.mismatches;
    o["failures"] = f.failures;
    fams.push_back(std::move(o));
  }
  j["checks"] = std::move(fams);
  j["notes"] = notes;
  return j.dump(2);
}

std::string SuiteReport::to_lines() const {
  std::ostringstream os;
  for (const auto& f : families) {
    os << (f.pass() ? "PASS " : "FAIL ") << f.family << " subjects=" << f.subjects
       << " cases=" << f.cases << " mismatches=" << f.mismatches << '\n';
    for (const auto& why : f.failures) os << "  " << why << '\n';
  }
  for (const auto& note : notes) os << "note " << note << '\n';
  os << (pass() ? "all checks passed" : "some checks failed") << " (max K = " << max_K << ")\n";
  return os.str();
}

SuiteReport verify_suite(int max_K, const SuiteOptions& opts) {
  std::vector<std::function<CheckResult()>> tasks;
  const auto multisets = multisets_up_to(max_K);
  const PsiOptions psi_opts = opts.psi;
  const int order = opts.series_order;

  auto wanted = [&opts](const char* family) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), family) != opts.only.end();
  };
  auto per_multiset = [&](const char* family, std::function<CheckResult(const MultisetSpec&)> fn,
                          int max_n = 1 << 20) {
    if (!wanted(family)) return;
    for (const auto& m : multisets)
      if (m.n() <= max_n) tasks.emplace_back([fn, m] { return fn(m); });
  };
  auto per_pair = [&](const char* family, CheckResult (*fn)(int, int), int bound) {
    if (!wanted(family)) return;
    for (int a = 1; a <= bound; ++a)
      for (int b = 1; a + b <= bound + 1; ++b) tasks.emplace_back([fn, a, b] { return fn(a, b); });
  };

  per_multiset("enumerate", check_enumeration);
  per_multiset("trees", check_trees);
  per_multiset("thm22", check_thm22);
  per_multiset("thm23", [psi_opts](const MultisetSpec& m) { return check_thm23(m, psi_opts); });
  per_multiset("thm11", [psi_opts](const MultisetSpec& m) { return check_thm11(m, psi_opts); });
  if (wanted("thm12"))
    for (int K = 1; K <= max_K; ++K)
      for (int n = 1; n <= K; ++n) tasks.emplace_back([K, n] { return check_thm12(K, n, n <= 3); });
  per_multiset("thm13", check_thm13);
  per_multiset("coro14", check_coro14);
  per_multiset("coro15", check_coro15, 5);
  per_multiset("eq2", [order](const MultisetSpec& m) { return check_eq2(m, order); });
  if (wanted("eq4"))
    for (int n = 1; n <= std::min(max_K, 7); ++n) tasks.emplace_back([n] { return check_eq4(n); });
  // chi/delta over n + m - 1 <= max_K; tuple families over m + n <= max_K.
  per_pair("chi", check_chi, max_K);
  per_pair("delta", check_delta, max_K);
  per_pair("eq5", check_eq5, max_K - 1);
  per_pair("eq6", check_eq6, max_K - 1);
  per_pair("eq7", check_eq7, max_K - 1);
  per_pair("zeta", check_zeta, max_K - 1);

  std::vector<CheckResult> results(tasks.size());
  const unsigned jobs = std::max(1u, opts.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport report;
  report.max_K = max_K;
  std::map<std::string, std::size_t> index;
  for (const auto& r : results) {
    auto [it, fresh] = index.try_emplace(r.family, report.families.size());
    if (fresh) report.families.push_back(FamilySummary{r.family, 0, 0, 0, {}});
    FamilySummary& f = report.families[it->second];
    ++f.subjects;
    f.cases += r.cases;
    f.mismatches += r.mismatches;
    if (!r.pass()) f.failures.push_back(r.subject + ": " + r.detail);
    if (r.family == "thm11" && r.pass()) report.notes.push_back("Phi on {" + r.subject + "}: " + r.detail);
  }
  return report;
}

std::string result_to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["check"] = r.family;
  j["subject"] = r.subject;
  j["pass"] = r.pass();
  j["cases"] = r.cases;
  j["mismatches"] = r.mismatches;
  j["detail"] = r.detail;
  return j.dump();
}

std::string result_to_line(const CheckResult& r) {
  return std::string(r.pass() ? "PASS " : "FAIL ") + r.family + " " + r.subject + ": " + r.detail;
}

}  // namespace qsp
