#pragma once

// Exhaustive checks of the enumerative identities, one function per
// identity family, plus a driver that sweeps every multiset up to a size.

#include "qsp/bijections.hpp"
#include "qsp/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsp {

struct CheckResult {
  std::string family;   // e.g. "thm22"
  std::string subject;  // e.g. "2,2" or "m=2,n=3"
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::string detail;

  bool pass() const { return mismatches == 0; }
};

/// enumerate_qs against filtering every permutation; lexicographic order.
CheckResult check_enumeration(const MultisetSpec& m);
/// Generated trees are valid, distinct, round-trip through text, and as many as words.
CheckResult check_trees(const MultisetSpec& m);
/// phi is a bijection carrying (cdes,casc,eleaf,first,last) to (des,asc,plat,first,last).
CheckResult check_thm22(const MultisetSpec& m);
/// Every admissible psi_j is a statistic-preserving bijection with inverse psi_inv.
CheckResult check_thm23(const MultisetSpec& m, PsiOptions opts = {});
/// big_phi is an (asc,des,plat)-preserving bijection onto the reduced multiset.
/// The detail also reports how often first and last survive, which is not asserted.
CheckResult check_thm11(const MultisetSpec& m, PsiOptions opts = {});
/// Equal polynomials across all n-compositions of K; with `with_transport`
/// also checks that transport is a triple-preserving bijection for each pair.
CheckResult check_thm12(int K, int n, bool with_transport);
/// des = d+1 counts against exc = d counts over J_{K,K-n+1}, and the map delta . big_phi.
CheckResult check_thm13(const MultisetSpec& m);
/// Brute-force count of words with n descents against (K-n+1)^(n-1).
CheckResult check_coro14(const MultisetSpec& m);
CheckResult check_coro15(const MultisetSpec& m);
CheckResult check_eq2(const MultisetSpec& m, int order);
/// Standard path/cycle form over all of J_{n,r}, 1 <= r <= n: round trip and excedance formula.
CheckResult check_eq4(int n);
/// chi over {1,...,n-1,n^m} (or delta over {1^m,2,...,n}) onto J_{n+m-1,m}.
CheckResult check_chi(int n, int m);
CheckResult check_delta(int n, int m);
CheckResult check_eq5(int m, int n);
CheckResult check_eq6(int m, int n);
CheckResult check_eq7(int m, int n);
CheckResult check_zeta(int m, int n);

struct FamilySummary {
  std::string family;
  int subjects = 0;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> failures;

  bool pass() const { return mismatches == 0; }
};

struct SuiteReport {
  int max_K = 0;
  std::vector<FamilySummary> families;
  std::vector<std::string> notes;

  bool pass() const;
  std::string to_json() const;
  std::string to_lines() const;
};

struct SuiteOptions {
  PsiOptions psi;
  int series_order = 8;
  unsigned jobs = 1;
  /// Family names to run; empty runs all of them.
  std::vector<std::string> only;
};

/// Runs every family over every multiset with K <= max_K (tuple and
/// partial-injection families use the matching size bound). The report is
/// identical for any number of jobs.
SuiteReport verify_suite(int max_K, const SuiteOptions& opts = {});

std::string result_to_json(const CheckResult& r);
std::string result_to_line(const CheckResult& r);

}  // namespace qsp
