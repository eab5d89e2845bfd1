#include "qsp/cli.hpp"

#include "qsp/bijections.hpp"
#include "qsp/core.hpp"
#include "qsp/excedance.hpp"
#include "qsp/genfun.hpp"
#include "qsp/trees.hpp"
#include "qsp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>

namespace qsp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string mult;
  std::string perm;
  std::string tree;
  std::string inj;
  std::string inj_set;
  std::string tuple;
  std::string which;
  std::string check;
  std::string format;
  std::string via = "brute";
  int order = 8;
  int max_k = 4;
  unsigned jobs = 1;
  std::optional<int> des;
  bool trees = false;
  bool mutate = false;
};

enum class Format { lines, json };

Format format_of(const Flags& f, Format fallback) {
  if (f.format.empty()) return fallback;
  if (f.format == "lines") return Format::lines;
  if (f.format == "json") return Format::json;
  throw InputError("--format must be lines or json");
}

MultisetSpec need_mult(const Flags& f) {
  if (f.mult.empty()) throw InputError("--mult is required");
  return MultisetSpec::parse(f.mult);
}

Word need_perm(const Flags& f) {
  if (f.perm.empty()) throw InputError("--perm is required");
  return parse_word(f.perm);
}

// The word's multiset: --mult if given (and then checked), else its value counts.
MultisetSpec mult_for(const Flags& f, const Word& w) {
  if (f.mult.empty()) return MultisetSpec::of_word(w);
  MultisetSpec m = MultisetSpec::parse(f.mult);
  m.require(w);
  return m;
}

TreeNode need_tree(const Flags& f) {
  if (f.tree.empty()) throw InputError("--tree is required");
  TreeNode t = parse_tree(f.tree);
  const TreeCheck c = check_tree(t, tree_multiset(t));
  if (!c) throw InputError("invalid tree: " + c.detail);
  if (!f.mult.empty()) {
    const MultisetSpec m = MultisetSpec::parse(f.mult);
    if (!validate_tree(t, m)) throw InputError("tree is not over {" + m.to_string() + "}");
  }
  return t;
}

// `n:v1,...` or path-and-cycle notation.
PartialInj need_inj(const Flags& f) {
  if (f.inj.empty()) throw InputError("--inj is required");
  if (f.inj.front() == '<' || f.inj.front() == '(') return from_path_cycle(parse_path_cycle(f.inj));
  return parse_partial_inj(f.inj);
}

std::pair<int, int> need_inj_set(const Flags& f) {
  const auto nr = parse_int_list(f.inj_set);
  if (nr.size() != 2) throw InputError("--inj-set must be n,r");
  if (nr[0] < 1 || nr[1] < 1 || nr[1] > nr[0]) throw InputError("--inj-set needs 1 <= r <= n");
  return {nr[0], nr[1]};
}

Json qs_stats_json(const Word& w) {
  const StatTriple s = stats(w);
  Json j;
  j["perm"] = format_word(w);
  j["asc"] = s.asc;
  j["des"] = s.des;
  j["plat"] = s.plat;
  return j;
}

void emit(std::ostream& os, Format fmt, const std::vector<std::string>& items, const char* key) {
  if (fmt == Format::lines) {
    for (const auto& s : items) os << s << '\n';
    return;
  }
  Json j;
  j["count"] = items.size();
  j[key] = items;
  os << j.dump(2) << '\n';
}

int do_enumerate(const Flags& f, std::ostream& os) {
  const Format fmt = format_of(f, Format::lines);
  std::vector<std::string> items;
  if (!f.inj_set.empty()) {
    const auto [n, r] = need_inj_set(f);
    for_each_partial_inj(n, r, [&](const PartialInj& s) { items.push_back(format_partial_inj(s)); });
    emit(os, fmt, items, "injections");
  } else if (f.trees) {
    for (const auto& t : enumerate_trees(need_mult(f))) items.push_back(render_tree(t));
    emit(os, fmt, items, "trees");
  } else {
    for_each_qs(need_mult(f), [&](const Word& w) { items.push_back(format_word(w)); });
    emit(os, fmt, items, "words");
  }
  return ok;
}

int do_stats(const Flags& f, std::ostream& os) {
  const Format fmt = format_of(f, Format::lines);
  Json j;
  if (!f.tree.empty()) {
    const TreeStats s = tree_stats(need_tree(f));
    j["tree"] = f.tree;
    j["cdes"] = s.cdes;
    j["casc"] = s.casc;
    j["eleaf"] = s.eleaf;
    j["first"] = s.first ? Json(*s.first) : Json(nullptr);
    j["last"] = s.last ? Json(*s.last) : Json(nullptr);
  } else if (!f.inj.empty()) {
    const PartialInj s = need_inj(f);
    j["inj"] = format_partial_inj(s);
    j["exc"] = exc(s);
    j["path_cycle"] = render_path_cycle(to_path_cycle(s));
  } else {
    const Word w = need_perm(f);
    mult_for(f, w);
    j = qs_stats_json(w);
    j["quasi_stirling"] = is_quasi_stirling(w);
    j["stirling"] = is_stirling(w);
  }
  if (fmt == Format::json) {
    os << j.dump(2) << '\n';
  } else {
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      os << (first ? "" : " ") << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    os << '\n';
  }
  return ok;
}

int do_poly(const Flags& f, std::ostream& os) {
  const Format fmt = format_of(f, Format::json);
  const MultisetSpec m = need_mult(f);
  PolyTUV p;
  if (f.via == "brute")
    p = qs_polynomial(m);
  else if (f.via == "formula")
    p = corollary2_poly(m);
  else
    throw InputError("--via must be brute or formula");
  if (fmt == Format::json) {
    Json j;
    j["mult"] = m.to_string();
    j["poly"] = Json::parse(poly_to_json(p));
    os << j.dump(2) << '\n';
  } else {
    os << poly_to_string(p) << '\n';
  }
  return ok;
}

int do_count(const Flags& f, std::ostream& os) {
  const Format fmt = format_of(f, Format::lines);
  std::uint64_t c = 0;
  std::string subject;
  if (!f.inj_set.empty()) {
    const auto [n, r] = need_inj_set(f);
    subject = f.inj_set;
    for_each_partial_inj(n, r, [&](const PartialInj& s) {
      if (!f.des || exc(s) == *f.des - 1) ++c;
    });
  } else if (f.trees) {
    const MultisetSpec m = need_mult(f);
    subject = m.to_string();
    for_each_tree(m, [&c](const TreeNode&) { ++c; });
  } else {
    const MultisetSpec m = need_mult(f);
    subject = m.to_string();
    for_each_qs(m, [&](const Word& w) {
      if (!f.des || stats(w).des == *f.des) ++c;
    });
  }
  if (fmt == Format::json) {
    Json j;
    j["subject"] = subject;
    if (f.des) j["des"] = *f.des;
    j["count"] = c;
    os << j.dump(2) << '\n';
  } else {
    os << c << '\n';
  }
  return ok;
}

Value parse_index(std::string_view which, std::string_view prefix) {
  const auto v = parse_int_list(which.substr(prefix.size()));
  if (v.size() != 1) throw InputError("expected a single index after " + std::string(prefix));
  return v.front();
}

std::string apply_map(const Flags& f) {
  const std::string_view which = f.which;
  const PsiOptions opts{f.mutate};
  if (which == "phi") return format_word(phi(need_tree(f)));
  if (which == "phi-inv") {
    const Word w = need_perm(f);
    mult_for(f, w);
    return render_tree(phi_inv(w));
  }
  if (which.starts_with("psi-inv:")) return render_tree(psi_inv(need_tree(f), parse_index(which, "psi-inv:")));
  if (which.starts_with("psi:")) return render_tree(psi(need_tree(f), parse_index(which, "psi:"), opts));
  if (which == "Psi") return render_tree(big_psi(need_tree(f), opts));
  if (which == "Phi") {
    const Word w = need_perm(f);
    mult_for(f, w);
    return format_word(big_phi(w, opts));
  }
  if (which == "Phi-inv") {
    if (f.mult.empty()) throw InputError("Phi-inv needs the target multiset in --mult");
    return format_word(big_phi_inv(need_perm(f), MultisetSpec::parse(f.mult)));
  }
  if (which == "chi" || which == "delta") {
    const Word w = need_perm(f);
    const MultisetSpec m = mult_for(f, w);
    return render_path_cycle(to_path_cycle(which == "chi" ? chi(w, m) : delta(w, m)));
  }
  if (which == "chi-inv") return format_word(chi_inv(need_inj(f)));
  if (which == "delta-inv") return format_word(delta_inv(need_inj(f)));
  if (which == "zeta") {
    if (f.tuple.empty()) throw InputError("--tuple is required");
    PermTuple a = parse_tuple(f.tuple);
    return format_word(zeta(a));
  }
  if (which == "zeta-inv") {
    const Word w = need_perm(f);
    return format_tuple(zeta_inv(w, mult_for(f, w)));
  }
  if (which.starts_with("transport:")) {
    const MultisetSpec target = MultisetSpec::parse(which.substr(std::string_view("transport:").size()));
    const Word w = need_perm(f);
    return format_word(transport(w, mult_for(f, w), target));
  }
  if (which == "decompose") {
    const Word w = need_perm(f);
    PermTuple parts{max_descent_decompose(w, mult_for(f, w))};
    return format_tuple(parts);
  }
  throw InputError("unknown map '" + f.which + "'");
}

int do_map(const Flags& f, std::ostream& os) {
  const Format fmt = format_of(f, Format::lines);
  const std::string result = apply_map(f);
  if (fmt == Format::json) {
    Json j;
    j["which"] = f.which;
    j["output"] = result;
    os << j.dump(2) << '\n';
  } else {
    os << result << '\n';
  }
  return ok;
}

// Shape (m,1,...,1) read as (m, n).
std::pair<int, int> bottom_shape(const MultisetSpec& ms) {
  for (Value i = 2; i <= ms.n(); ++i)
    if (ms.multiplicity(i) != 1) throw InputError("this check needs --mult of the shape m,1,...,1");
  return {ms.multiplicity(1), ms.n()};
}

std::optional<CheckResult> single_check(const Flags& f) {
  if (f.mult.empty()) return std::nullopt;
  const MultisetSpec m = MultisetSpec::parse(f.mult);
  const PsiOptions opts{f.mutate};
  const std::string& c = f.check;
  if (c == "enumerate") return check_enumeration(m);
  if (c == "trees") return check_trees(m);
  if (c == "thm22") return check_thm22(m);
  if (c == "thm23") return check_thm23(m, opts);
  if (c == "thm11") return check_thm11(m, opts);
  if (c == "thm12") return check_thm12(m.total(), m.n(), true);
  if (c == "thm13") return check_thm13(m);
  if (c == "coro14") return check_coro14(m);
  if (c == "coro15") return check_coro15(m);
  if (c == "eq2") return check_eq2(m, f.order);
  if (c == "eq4") return check_eq4(m.total());
  if (c == "delta") {
    const auto [mm, n] = bottom_shape(m);
    return check_delta(n, mm);
  }
  if (c == "chi") {
    for (Value i = 1; i < m.n(); ++i)
      if (m.multiplicity(i) != 1) throw InputError("chi needs --mult of the shape 1,...,1,m");
    return check_chi(m.n(), m.multiplicity(m.n()));
  }
  const auto [mm, n] = bottom_shape(m);
  if (c == "eq5") return check_eq5(mm, n);
  if (c == "eq6") return check_eq6(mm, n);
  if (c == "eq7") return check_eq7(mm, n);
  if (c == "zeta") return check_zeta(mm, n);
  throw InputError("unknown check '" + c + "'");
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"enumerate", "trees", "thm22", "thm23", "thm11", "thm12",
                                              "thm13",     "coro14", "coro15", "eq2",  "eq4",   "chi",
                                              "delta",     "eq5",    "eq6",    "eq7",  "zeta"};
  return names;
}

int do_verify(const Flags& f, std::ostream& os) {
  const Format fmt = format_of(f, Format::json);
  if (f.order < 0) throw InputError("--order must be non-negative");
  if (!f.check.empty() &&
      std::find(check_names().begin(), check_names().end(), f.check) == check_names().end())
    throw InputError("unknown check '" + f.check + "'");
  if (auto r = single_check(f)) {
    os << (fmt == Format::json ? result_to_json(*r) : result_to_line(*r)) << '\n';
    return r->pass() ? ok : check_failed;
  }
  if (f.max_k < 1) throw InputError("--max-k must be at least 1");
  SuiteOptions opts;
  opts.psi.moved_vertex_leftmost = f.mutate;
  opts.series_order = f.order;
  opts.jobs = f.jobs;
  if (!f.check.empty()) opts.only.push_back(f.check);
  const SuiteReport report = verify_suite(f.max_k, opts);
  if (fmt == Format::json)
    os << report.to_json() << '\n';
  else
    os << report.to_lines();
  return report.pass() ? ok : check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Stirling permutations, their trees and bijections", "qsp"};
  app.require_subcommand(1);
  Flags f;

  auto* enumerate = app.add_subcommand("enumerate", "List quasi-Stirling permutations, trees or partial injections");
  auto* stats_cmd = app.add_subcommand("stats", "Statistics of a permutation, tree or partial injection");
  auto* poly = app.add_subcommand("poly", "The (des, asc, plat) polynomial of a multiset");
  auto* map = app.add_subcommand("map", "Apply one of the bijections");
  auto* verify = app.add_subcommand("verify", "Check identities exhaustively");
  auto* count = app.add_subcommand("count", "Count quasi-Stirling permutations, trees or partial injections");

  for (auto* c : {enumerate, stats_cmd, poly, map, verify, count}) {
    c->add_option("--format", f.format, "lines or json");
    c->add_option("--mult", f.mult, "Multiplicities k1,k2,...");
  }
  for (auto* c : {stats_cmd, map}) {
    c->add_option("--perm", f.perm, "Permutation v1,v2,...");
    c->add_option("--tree", f.tree, "Tree such as 0(1,2(2))");
    c->add_option("--inj", f.inj, "Partial injection n:v1,... or path/cycle notation");
  }
  for (auto* c : {enumerate, count}) {
    c->add_option("--inj-set", f.inj_set, "Use J_{n,r}, given as n,r");
    c->add_flag("--trees", f.trees, "Use trees instead of permutations");
  }
  count->add_option("--des", f.des, "Only permutations with this many descents");
  poly->add_option("--via", f.via, "brute or formula");
  map->add_option("--which", f.which, "phi|phi-inv|psi:j|psi-inv:j|Psi|Phi|Phi-inv|chi|chi-inv|delta|delta-inv|"
                                      "zeta|zeta-inv|transport:<mult>|decompose")
      ->required();
  map->add_option("--tuple", f.tuple, "Permutation tuple, parts separated by |");
  for (auto* c : {map, verify}) c->add_flag("--mutate", f.mutate, "Attach the moved vertex leftmost in psi");
  verify->add_option("--check", f.check, "One identity family");
  verify->add_option("--order", f.order, "Series order");
  verify->add_option("--max-k", f.max_k, "Largest K swept");
  verify->add_option("--jobs", f.jobs, "Worker threads");

  std::vector<const char*> argv{"qsp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.front()->help());
    return bad_input;
  }

  std::ostringstream buffer;
  int status = ok;
  try {
    if (enumerate->parsed()) status = do_enumerate(f, buffer);
    if (stats_cmd->parsed()) status = do_stats(f, buffer);
    if (poly->parsed()) status = do_poly(f, buffer);
    if (map->parsed()) status = do_map(f, buffer);
    if (verify->parsed()) status = do_verify(f, buffer);
    if (count->parsed()) status = do_count(f, buffer);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  }
  out << buffer.str();
  return status;
}

}  // namespace qsp::cli
