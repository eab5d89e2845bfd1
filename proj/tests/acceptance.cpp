// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "qsp/bijections.hpp"
#include "qsp/core.hpp"
#include "qsp/excedance.hpp"
#include "qsp/genfun.hpp"
#include "qsp/trees.hpp"
#include "qsp/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace qsp;

namespace {

// Pinned limits.
constexpr double kListingSeconds = 1.0;
constexpr double kTreeBijectionSeconds = 300.0;
constexpr int kMaxK = 8;
constexpr int kPsiMaxK = 7;
constexpr int kSeriesMaxK = 7;
constexpr int kSeriesOrder = 8;
constexpr int kTransportMaxK = 7;
constexpr int kTransportMaxN = 3;
constexpr int kFormulaMaxN = 5;
constexpr int kTupleBound = 7;
constexpr int kMutationMaxK = 5;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

oracle::Poly as_oracle(const PolyTUV& p) {
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) out[{m.t, m.u, m.v}] = c.convert_to<std::int64_t>();
  return out;
}

void absorb(Verdict& v, const CheckResult& r) {
  if (!r.pass()) v.fail(result_to_line(r));
}

std::vector<int> bottom_heavy(int m, int n) {
  std::vector<int> k(static_cast<std::size_t>(n), 1);
  k[0] = m;
  return k;
}

Verdict listing() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto words = enumerate_qs(MultisetSpec({2, 2}));
  const double secs = since(t0);
  const std::vector<Word> expect{{1, 1, 2, 2}, {1, 2, 2, 1}, {2, 1, 1, 2}, {2, 2, 1, 1}};
  v.require(words == expect, "listing differs");
  v.require(secs < kListingSeconds, "took " + std::to_string(secs) + " s");
  if (v.pass) v.detail = "4 words in " + std::to_string(secs) + " s";
  return v;
}

Verdict tree_example() {
  Verdict v;
  const Word x{2, 7, 4, 7, 5, 6, 3, 3, 5, 1, 5};
  const TreeNode t = phi_inv(x);
  const TreeStats s = tree_stats(t);
  v.require(validate_tree(t, MultisetSpec({1, 1, 2, 1, 3, 1, 2})), "tree does not validate");
  v.require(s.cdes == 5 && s.casc == 6 && s.eleaf == 1, "statistics differ");
  v.require(phi(t) == x, "phi does not return the word");
  if (v.pass) v.detail = render_tree(t) + " cdes 5 casc 6 eleaf 1";
  return v;
}

Verdict tree_bijection() {
  Verdict v;
  const auto t0 = Clock::now();
  std::uint64_t cases = 0;
  for (const auto& m : multisets_up_to(kMaxK)) {
    const CheckResult r = check_thm22(m);
    absorb(v, r);
    cases += r.cases;
    std::set<Word> images;
    for_each_tree(m, [&](const TreeNode& t) { images.insert(phi(t)); });
    const auto words = oracle::qs_words(m.multiplicities());
    v.require(std::vector<Word>(images.begin(), images.end()) == words,
              "image set differs from the quartic-scan listing at " + m.to_string());
  }
  const double secs = since(t0);
  v.require(secs < kTreeBijectionSeconds, "took " + std::to_string(secs) + " s");
  if (v.pass) v.detail = std::to_string(cases) + " trees, " + std::to_string(secs) + " s";
  return v;
}

Verdict psi_maps() {
  Verdict v;
  std::uint64_t cases = 0;
  for (const auto& m : multisets_up_to(kPsiMaxK)) {
    const CheckResult r = check_thm23(m);
    absorb(v, r);
    cases += r.cases;
  }
  if (v.pass) v.detail = std::to_string(cases) + " tree/j pairs";
  return v;
}

Verdict phi_reduction() {
  Verdict v;
  std::uint64_t cases = 0;
  for (const auto& m : multisets_up_to(kMaxK)) {
    const CheckResult r = check_thm11(m);
    absorb(v, r);
    cases += r.cases;
    std::map<std::tuple<int, int, int>, int> before, after;
    for (const auto& x : oracle::qs_words(m.multiplicities())) {
      const auto s = oracle::stats(big_phi(x));
      ++after[{s.asc, s.des, s.plat}];
    }
    for (const auto& x : oracle::qs_words(reduced_multiset(m).multiplicities())) {
      const auto s = oracle::stats(x);
      ++before[{s.asc, s.des, s.plat}];
    }
    v.require(before == after, "triple distribution differs at " + m.to_string());
  }
  v.require(big_phi(Word{2, 2, 1}) == Word{2, 1, 1}, "Phi(2,2,1) != 2,1,1");
  if (v.pass) v.detail = std::to_string(cases) + " words; Phi(2,2,1) = 2,1,1";
  return v;
}

Verdict compositions_agree() {
  Verdict v;
  int families = 0;
  for (int K = 1; K <= kTransportMaxK; ++K)
    for (int n = 1; n <= std::min(K, kTransportMaxN); ++n) {
      ++families;
      const auto family = compositions(K, n);
      const oracle::Poly first = oracle::qs_poly(family.front().multiplicities());
      for (const auto& m : family)
        v.require(oracle::qs_poly(m.multiplicities()) == first, "distribution differs at " + m.to_string());
      absorb(v, check_thm12(K, n, true));
    }
  if (v.pass) v.detail = std::to_string(families) + " (K, n) families";
  return v;
}

Verdict chi_example() {
  Verdict v;
  const Word x{4, 6, 9, 9, 5, 2, 8, 9, 1, 7, 3};
  const PartialInj s = chi(x, MultisetSpec({1, 1, 1, 1, 1, 1, 1, 1, 3}));
  const std::string text = render_path_cycle(to_path_cycle(s));
  v.require(text == "<4,6,9><10><5,2,8,11>(1,7,3)", "rendered " + text);
  v.require(oracle::excedances(s.values()) == 5, "exc is not 5");
  v.require(oracle::stats(x).asc == 6, "asc is not 6");
  if (v.pass) v.detail = text + " exc 5 asc 6";
  return v;
}

Verdict descents_vs_excedances() {
  Verdict v;
  for (const auto& m : multisets_up_to(kMaxK)) {
    const int K = m.total(), n = m.n();
    std::map<int, int> des, ex;
    for (const auto& x : oracle::qs_words(m.multiplicities())) ++des[oracle::stats(x).des - 1];
    for (const auto& s : enumerate_J(K, K - n + 1)) ++ex[exc(s)];
    v.require(des == ex, "counts differ at " + m.to_string());
    absorb(v, check_thm13(m));
  }
  if (v.pass) v.detail = "all multisets with K <= " + std::to_string(kMaxK);
  return v;
}

Verdict max_descents() {
  Verdict v;
  for (const auto& m : multisets_up_to(kMaxK)) {
    std::int64_t count = 0;
    for (const auto& x : oracle::qs_words(m.multiplicities()))
      if (oracle::stats(x).des == m.n()) ++count;
    v.require(max_descent_count(m) == count, "count differs at " + m.to_string());
  }
  v.require(max_descent_count(MultisetSpec({2, 2})) == 3, "(2,2) is not 3");
  v.require(max_descent_count(MultisetSpec({2, 2, 2})) == 16, "(2,2,2) is not 16");
  v.require(max_descent_count(MultisetSpec({3, 1, 1})) == 9, "(3,1,1) is not 9");
  if (v.pass) v.detail = "(2,2) 3, (2,2,2) 16, (3,1,1) 9";
  return v;
}

Verdict coefficient_formula() {
  Verdict v;
  int subjects = 0;
  for (const auto& m : multisets_up_to(kMaxK)) {
    if (m.n() > kFormulaMaxN) continue;
    ++subjects;
    const PolyTUV f = corollary2_poly(m);
    v.require(f == qs_polynomial(m), "formula differs at " + m.to_string());
    v.require(as_oracle(f) == oracle::qs_poly(m.multiplicities()), "oracle differs at " + m.to_string());
  }
  const PolyTUV spot = PolyTUV::monomial({2, 2, 1}, 2) + PolyTUV::monomial({1, 2, 2}) + PolyTUV::monomial({2, 1, 2});
  v.require(corollary2_poly(MultisetSpec({2, 2})) == spot, "(2,2) spot value differs");
  if (v.pass) v.detail = std::to_string(subjects) + " multisets";
  return v;
}

Verdict series_identity() {
  Verdict v;
  for (const auto& m : multisets_up_to(kSeriesMaxK)) absorb(v, check_eq2(m, kSeriesOrder));
  const auto c = eq2_series_check(MultisetSpec({2, 2}), kSeriesOrder);
  const std::vector<Rational> head{0, 1, 8, 30, 80};
  v.require(std::vector<Rational>(c.closed_form.begin(), c.closed_form.begin() + 5) == head, "closed form head");
  v.require(std::vector<Rational>(c.via_polynomial.begin(), c.via_polynomial.begin() + 5) == head, "series head");
  if (v.pass) v.detail = "(2,2): 0, 1, 8, 30, 80";
  return v;
}

Verdict tuple_identities() {
  Verdict v;
  int pairs = 0;
  for (int m = 1; m < kTupleBound; ++m)
    for (int n = 1; m + n <= kTupleBound; ++n) {
      ++pairs;
      const PolyTUV brute = p1_polynomial(m, n);
      v.require(brute == p1_formula(m, n), "formula differs at m=" + std::to_string(m) + ",n=" + std::to_string(n));
      v.require(as_oracle(brute) == oracle::qs_poly(bottom_heavy(m, n)),
                "word polynomial differs at m=" + std::to_string(m) + ",n=" + std::to_string(n));
      absorb(v, check_zeta(m, n));
    }
  if (v.pass) v.detail = std::to_string(pairs) + " (m, n) pairs";
  return v;
}

Verdict mutation() {
  Verdict v;
  SuiteOptions opts;
  opts.psi.moved_vertex_leftmost = true;
  opts.only = {"thm23", "thm11"};
  const SuiteReport r = verify_suite(kMutationMaxK, opts);
  std::uint64_t broken = 0;
  for (const auto& f : r.families) broken += f.mismatches;
  v.require(broken > 0, "mutated psi passed every check");
  if (v.pass) v.detail = std::to_string(broken) + " mismatches with the mutation";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
      {"listing of {1^2,2^2}", listing},
      {"tree example statistics", tree_example},
      {"phi bijection with statistics, K <= 8", tree_bijection},
      {"psi_j invertible and statistic-preserving, K <= 7", psi_maps},
      {"Phi onto the reduced multiset, K <= 8", phi_reduction},
      {"composition distributions agree, n <= 3, K <= 7", compositions_agree},
      {"chi example", chi_example},
      {"descents against excedances, K <= 8", descents_vs_excedances},
      {"maximal descent count, K <= 8", max_descents},
      {"coefficient formula, K <= 8, n <= 5", coefficient_formula},
      {"series identity to order 8, K <= 7", series_identity},
      {"tuple polynomials and zeta, m + n <= 7", tuple_identities},
      {"mutation of psi is detected, K <= 5", mutation},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failed;
    std::printf("criterion %2d %s: %s -- %s\n", index, v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
