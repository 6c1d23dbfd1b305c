#include "exlie/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "exlie/composition_algebra.hpp"
#include "exlie/error.hpp"
#include "exlie/fts.hpp"
#include "exlie/jordan_core.hpp"
#include "exlie/lie_labels.hpp"
#include "exlie/parabolic.hpp"
#include "exlie/relations.hpp"
#include "exlie/root_system.hpp"
#include "exlie/symmetry_dims.hpp"
#include "exlie/tables.hpp"

namespace exlie {

int SuiteResult::passed() const {
  int n = 0;
  for (const auto& i : items) n += i.passed;
  return n;
}

int SuiteResult::failed() const {
  int n = 0;
  for (const auto& i : items) n += i.failed;
  return n;
}

void SuiteResult::check(const std::string& subject, bool ok, const std::string& detail) {
  items.push_back({subject, ok ? 1 : 0, ok ? 0 : 1});
  if (!ok) failures.push_back(detail.empty() ? subject : subject + ": " + detail);
}

void SuiteResult::add_counts(const std::string& subject, int passed, int failed) {
  items.push_back({subject, passed, failed});
  if (failed > 0) failures.push_back(subject + ": " + std::to_string(failed) + " failed");
}

int VerifyReport::failed() const {
  int n = 0;
  for (const auto& s : suites) n += s.failed();
  return n;
}

namespace {

using Forms = std::vector<RealForm>;

const Forms& forms_of(const VerifyOptions& o) { return o.forms ? *o.forms : registry(); }

// Looks a form up in the registry under test; records a failure when absent.
const RealForm* lookup(const Forms& forms, const std::string& label, SuiteResult& r) {
  try {
    return &find_form(forms, label);
  } catch (const Error&) {
    r.check(label, false, "form missing from the registry");
    return nullptr;
  }
}

std::string str(long v) { return std::to_string(v); }

std::string grades_string(const std::map<int, int>& g) {
  std::string s = "{";
  for (auto [k, d] : g) s += (s.size() > 1 ? ", " : "") + str(k) + ":" + str(d);
  return s + "}";
}

// Decorrelated per-subject seed.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// --------------------------------------------------------------- suites

SuiteResult composition_identities(const VerifyOptions& o) {
  SuiteResult r;
  std::uint64_t i = 0;
  for (CALabel l : all_ca_labels()) {
    const CompositionAlgebra& a = algebra(l);
    std::mt19937_64 rng(sub_seed(o.seed, i++));
    int ok_norm = 0, ok_alt = 0, ok_conj = 0;
    for (int t = 0; t < o.trials; ++t) {
      Vec x = random_vec(rng, a.dim()), y = random_vec(rng, a.dim());
      Vec xy = a.multiply(x, y);
      ok_norm += a.norm(xy) == a.norm(x) * a.norm(y);
      ok_alt += a.multiply(x, a.multiply(x, y)) == a.multiply(a.multiply(x, x), y) &&
                a.multiply(a.multiply(y, x), x) == a.multiply(y, a.multiply(x, x));
      ok_conj += a.conjugate(xy) == a.multiply(a.conjugate(y), a.conjugate(x));
    }
    const std::string n = to_string(l);
    r.add_counts(n + " norm multiplicativity", ok_norm, o.trials - ok_norm);
    r.add_counts(n + " alternativity", ok_alt, o.trials - ok_alt);
    r.add_counts(n + " conjugation anti-automorphism", ok_conj, o.trials - ok_conj);
  }
  return r;
}

const std::vector<std::string>& identity_algebras() {
  static const std::vector<std::string> v{
      "R",      "R+Gamma(8,0)", "R+Gamma(4,4)", "R+Gamma(5,3)", "R+Gamma(1,2)",
      "J3(R)",  "J3(C)",        "J3(Cs)",       "J3(H)",        "J3(Hs)",
      "J3(O)",  "J3(Os)"};
  return v;
}

SuiteResult jordan_identities(const VerifyOptions& o) {
  SuiteResult r;
  std::uint64_t i = 0;
  for (const auto& name : identity_algebras()) {
    auto alg = jordan(parse_descriptor(name));
    for (const auto& c : jordan_identity_suite(*alg, o.trials, sub_seed(o.seed, i++)))
      r.add_counts(name + " " + c.name, c.passed, c.failed);
  }
  return r;
}

SuiteResult fts_identities(const VerifyOptions& o) {
  SuiteResult r;
  std::uint64_t i = 100;
  for (const std::string name : {"J3(R)", "J3(C)", "J3(Os)"}) {
    FreudenthalTripleSystem f(jordan(parse_descriptor(name)));
    for (const auto& c : fts_identity_suite(f, o.trials, sub_seed(o.seed, i++)))
      r.add_counts("F(" + name + ") " + c.name, c.passed, c.failed);
  }
  return r;
}

SuiteResult symmetry_table1(const VerifyOptions&) {
  SuiteResult r;
  for (const auto& c : verify_table1().checks)
    r.check(c.subject + " = " + c.label, c.ok(),
            "expected dimension " + str(c.expected) + ", computed " + str(c.computed));
  return r;
}

SuiteResult symmetry_embeddings(const VerifyOptions&) {
  SuiteResult r;
  for (const auto& c : verify_embedding_dims()) r.check(c.subject + " " + c.relation, c.ok);
  return r;
}

SuiteResult symmetry_lorentzian(const VerifyOptions&) {
  SuiteResult r;
  for (const std::string name : {"J12(O)", "J12(Os)"}) {
    const auto rep = symmetry_report(parse_descriptor(name));
    r.check("dim der " + name + " = 52", rep.dim_der == 52, "computed " + str(rep.dim_der));
  }
  // The norm-derived product agrees with the matrix product.
  const auto d = parse_descriptor("J12(O)");
  auto alg = jordan(d);
  std::mt19937_64 rng(7);
  bool same = true;
  for (int t = 0; t < 10; ++t) {
    Vec x = random_vec(rng, alg->dim()), y = random_vec(rng, alg->dim());
    same = same && alg->circ(x, y) == matrix_jordan_product(d, x, y);
  }
  r.check("J12(O) product = matrix product", same);
  return r;
}

SuiteResult root_systems(const VerifyOptions&) {
  SuiteResult r;
  // Oracle: |Φ| from the classification formulas.
  const std::vector<std::pair<std::string, int>> expected{
      {"A1", 2},  {"A4", 20},  {"B3", 18},  {"C3", 18},  {"D4", 24},  {"D5", 40},
      {"E6", 72}, {"E7", 126}, {"E8", 240}, {"F4", 48},  {"G2", 12}};
  for (const auto& [type, n] : expected) {
    const RootSystem& rs = root_system(type);
    r.check(type + " root count", rs.num_roots() == n, "computed " + str(rs.num_roots()));
  }
  r.check("E6 dim", root_system("E6").dim() == 78);
  r.check("E7 dim", root_system("E7").dim() == 133);
  r.check("E8 dim", root_system("E8").dim() == 248);
  r.check("F4 dim", root_system("F4").dim() == 52);
  r.check("G2 dim", root_system("G2").dim() == 14);
  r.check("E8 without node 7 is E7",
          classify_subsystem(root_system("E8"), {1, 2, 3, 4, 5, 6, 8}) ==
              std::vector<std::string>{"E7"});
  r.check("E8 without node 8 is A7",
          classify_subsystem(root_system("E8"), {1, 2, 3, 4, 5, 6, 7}) ==
              std::vector<std::string>{"A7"});
  return r;
}

SuiteResult realform_registry(const VerifyOptions& o) {
  SuiteResult r;
  const std::map<std::string, int> golden_npm{
      {"E6(6)", 36},  {"E6(2)", 36},   {"E6(-14)", 30}, {"E6(-26)", 24},
      {"E7(7)", 63},  {"E7(-5)", 60},  {"E7(-25)", 51}, {"E8(8)", 120},
      {"E8(-24)", 108}, {"F4(4)", 24}, {"F4(-20)", 15}, {"G2(2)", 6}};
  for (const auto& f : forms_of(o)) {
    std::vector<std::string> problems;
    try {
      problems = registry_problems(f);
    } catch (const Error& e) {
      problems.push_back(e.what());
    }
    std::string joined;
    for (const auto& p : problems) joined += (joined.empty() ? "" : "; ") + p;
    r.check(f.label + " registry consistency", problems.empty(), joined);
    try {
      const int sum = restricted_root_system(f).positive_multiplicity_sum();
      auto it = golden_npm.find(normalize_form_label(f.label));
      if (it != golden_npm.end())
        r.check(f.label + " multiplicity sum = " + str(it->second), sum == it->second,
                "computed " + str(sum));
      r.check(f.label + " multiplicity sum = dim N", sum == f.dim_Npm,
              "computed " + str(sum) + ", registered " + str(f.dim_Npm));
      const int m0 = f.dim_g - 2 * f.dim_Npm - f.split_rank();
      r.check(f.label + " dim M0 = dim " + f.m0_label, m0 == lie_dim(f.m0_label),
              "dim g - 2 dim N - r = " + str(m0) + ", label " + str(lie_dim(f.m0_label)));
      r.check(f.label + " dim M0 from roots", dim_m0_from_roots(f) == lie_dim(f.m0_label),
              "computed " + str(dim_m0_from_roots(f)));
    } catch (const Error& e) {
      r.check(f.label + " restricted roots", false, e.what());
    }
  }
  return r;
}

SuiteResult parabolic_max_table(const VerifyOptions& o) {
  SuiteResult r;
  for (const auto& row : max_parabolic_table()) {
    const RealForm* f = lookup(forms_of(o), row.form, r);
    if (!f) continue;
    const std::string subject = row.form + " P" + str(row.j);
    try {
      auto p = maximal_parabolic(*f, row.j);
      r.check(subject + " Levi " + row.levi, p.levi_label() == canonical_label(row.levi),
              "computed " + p.levi_label());
      r.check(subject + " abelian rank", p.abelian_rank == row.abelian_rank,
              "computed " + str(p.abelian_rank) + ", tabulated " + str(row.abelian_rank));
      r.check(subject + " dim N = " + str(row.dim_n), p.dim_n_theta == row.dim_n,
              "computed " + str(p.dim_n_theta));
    } catch (const Error& e) {
      r.check(subject, false, e.what());
    }
  }
  return r;
}

SuiteResult parabolic_bruhat(const VerifyOptions& o) {
  SuiteResult r;
  for (const auto& f : forms_of(o)) {
    int ok = 0, bad = 0;
    std::string first_bad;
    try {
      for (const auto& p : all_standard_parabolics(f)) {
        bool good = p.dim_m_theta + p.dim_a_theta + 2 * p.dim_n_theta == f.dim_g &&
                    p.levi_label_dim() == p.dim_m_theta;
        good ? ++ok : ++bad;
        if (!good && first_bad.empty()) {
          first_bad = "theta {";
          for (int t : p.theta) first_bad += str(t) + ",";
          first_bad += "}";
        }
      }
    } catch (const Error& e) {
      ++bad;
      first_bad = e.what();
    }
    r.items.push_back({f.label + " Bruhat dimension count", ok, bad});
    if (bad) r.failures.push_back(f.label + ": " + str(bad) + " subsets fail, first " + first_bad);
  }
  return r;
}

SuiteResult parabolic_gradings(const VerifyOptions& o) {
  SuiteResult r;
  for (const auto& f : forms_of(o)) {
    for (int j = 1; j <= f.split_rank(); ++j) {
      const std::string subject = f.label + " P" + str(j);
      try {
        auto g = grading_profile(f, j);
        auto p = maximal_parabolic(f, j);
        bool sym = true;
        for (auto [k, d] : g.grades) sym = sym && g.grades.count(-k) && g.grades.at(-k) == d;
        r.check(subject + " grade symmetry", sym);
        r.check(subject + " total = dim g", g.total() == f.dim_g, "total " + str(g.total()));
        r.check(subject + " positive sum = dim N", g.positive_sum() == p.dim_n_theta);
        r.check(subject + " dim g^0 = dim M + 1", g.grades.at(0) == p.dim_m_theta + 1);
      } catch (const Error& e) {
        r.check(subject, false, e.what());
      }
    }
  }
  for (const auto& row : grading_table()) {
    const RealForm* f = lookup(forms_of(o), row.form, r);
    if (!f) continue;
    const std::string subject = row.form + " grading " + row.tabulated_index;
    auto g = grading_profile(*f, row.j);
    std::map<int, int> positive;
    for (auto [k, d] : g.grades)
      if (k > 0) positive[k] = d;
    r.check(subject + " per-grade dimensions", positive == row.displayed,
            "computed " + grades_string(positive) + ", tabulated " +
                grades_string(row.displayed));
    r.check(subject + " depth " + str((row.stated_grading - 1) / 2) + " (" +
                str(row.stated_grading) + "-grading)",
            2 * g.depth + 1 == row.stated_grading,
            "computed depth " + str(g.depth) + " (" + str(2 * g.depth + 1) + "-grading)");
    if (!row.note.empty()) r.notes.push_back(subject + ": " + row.note);
  }
  return r;
}

SuiteResult parabolic_long_short(const VerifyOptions& o) {
  SuiteResult r;
  for (const auto& row : max_parabolic_table()) {
    if (!row.long_short) continue;
    const RealForm* f = lookup(forms_of(o), row.form, r);
    if (!f) continue;
    const std::string subject = row.form + " P" + str(row.j) + " (long, short) = (" +
                                str(row.long_short->first) + ", " +
                                str(row.long_short->second) + ")";
    try {
      auto c = long_short_counts(*f, row.j);
      r.check(subject,
              c.long_count == row.long_short->first && c.short_count == row.long_short->second,
              "computed (" + str(c.long_count) + ", " + str(c.short_count) + ")");
    } catch (const Error& e) {
      r.check(subject, false, e.what());
    }
  }
  return r;
}

SuiteResult relations_table(const VerifyOptions& o) {
  SuiteResult r;
  RelatedSweep s;
  try {
    s = enumerate_max_related(forms_of(o));
  } catch (const Error& e) {
    r.check("sweep", false, e.what());
    return r;
  }
  for (const auto& c : s.classes) {
    const std::string subject = "row " + str(*c.row_id) + " (" + c.complexified_levi.to_string() +
                                ", dim N " + str(c.dim_n) + ")";
    std::string detail;
    for (const auto& m : c.missing) detail += "missing " + m.form + " " + m.levi + "; ";
    for (const auto& m : c.extra) detail += "extra " + m.form + " P" + str(m.j) + "; ";
    r.check(subject, c.exact_match, detail);
    for (const auto& n : c.notes) r.notes.push_back("row " + str(*c.row_id) + ": " + n);
  }
  for (int row : s.unmatched_rows) r.check("row " + str(row), false, "no realized class");
  std::string beyond;
  for (const auto& c : s.beyond_table) {
    beyond += c.complexified_levi.to_string() + ":";
    for (const auto& m : c.members) beyond += " " + m.form + " P" + str(m.j);
    beyond += "; ";
  }
  r.check("no classes beyond the table", s.beyond_table.empty(), beyond);
  // Equivalence relation on all maximal parabolics.
  std::vector<ParabolicSubalgebra> ps;
  for (const auto& f : forms_of(o))
    for (const auto& p : maximal_parabolics(f)) ps.push_back(p);
  bool refl = true, symm = true, trans = true;
  const std::size_t n = ps.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel[a][b] = parabolically_related(ps[a], ps[b]);
  for (std::size_t a = 0; a < n; ++a) {
    refl = refl && rel[a][a];
    for (std::size_t b = 0; b < n; ++b) {
      symm = symm && rel[a][b] == rel[b][a];
      for (std::size_t c = 0; c < n && trans; ++c)
        if (rel[a][b] && rel[b][c]) trans = rel[a][c];
    }
  }
  r.check("relatedness reflexive", refl);
  r.check("relatedness symmetric", symm);
  r.check("relatedness transitive", trans);
  return r;
}

SuiteResult relations_roles(const VerifyOptions&) {
  SuiteResult r;
  std::set<std::string> unverified;
  for (const auto& role : all_roles()) {
    const std::string subject = role.spec.text() + " = " + role.label;
    if (role.registry_only) {
      unverified.insert(role.spec.text());
      continue;
    }
    r.check(subject, role.verified(),
            "label dimension " + str(role.label_dim) + ", computed " +
                (role.computed_dim ? str(*role.computed_dim) : "none"));
  }
  for (const auto& u : unverified) r.notes.push_back("registry-only role: " + u);
  r.check("registry-only roles <= 3", unverified.size() <= 3, str(unverified.size()) + " roles");
  // Spot checks of the interpretation lookup.
  auto has = [](const std::string& label, const std::string& text) {
    for (const auto& role : jordan_interpretation(label))
      if (role.spec.text() == text) return true;
    return false;
  };
  r.check("E6(-26) is str0(J3(O))", has("E6(-26)", "str0(J3(O))"));
  r.check("so(5,5) is str0(J2(Os))", has("so(5,5)", "str0(J2(Os))"));
  r.check("F4(-20) is der(J12(O))", has("F4(-20)", "der(J12(O))"));
  r.check("E7(7) is conf(J3(Os)) and qconf(J3(Hs))",
          has("E7(7)", "conf(J3(Os))") && has("E7(7)", "qconf(J3(Hs))"));
  return r;
}

struct SuiteDef {
  std::string name;
  std::function<SuiteResult(const VerifyOptions&)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> s{
      {"composition.identities", composition_identities},
      {"jordan.identities", jordan_identities},
      {"fts.identities", fts_identities},
      {"symmetry.table1", symmetry_table1},
      {"symmetry.embeddings", symmetry_embeddings},
      {"symmetry.lorentzian", symmetry_lorentzian},
      {"roots.systems", root_systems},
      {"realform.registry", realform_registry},
      {"parabolic.max_table", parabolic_max_table},
      {"parabolic.bruhat", parabolic_bruhat},
      {"parabolic.gradings", parabolic_gradings},
      {"parabolic.long_short", parabolic_long_short},
      {"relations.table_a", relations_table},
      {"relations.roles", relations_roles},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

bool suite_selected(const std::string& name, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  const std::string module = name.substr(0, name.find('.'));
  return std::any_of(only.begin(), only.end(),
                     [&](const std::string& o) { return o == name || o == module; });
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  for (const auto& s : suites()) {
    if (s.name != name) continue;
    SuiteResult r;
    try {
      r = s.run(opts);
    } catch (const std::exception& e) {
      r.check("suite aborted", false, e.what());
    }
    r.name = s.name;
    r.module = s.name.substr(0, s.name.find('.'));
    return r;
  }
  throw Error(ErrorKind::kUsage, "unknown suite '" + name + "'");
}

VerifyReport verify_all(const VerifyOptions& opts) {
  std::vector<std::string> selected;
  for (const auto& n : suite_names())
    if (suite_selected(n, opts.only)) selected.push_back(n);
  if (selected.empty()) {
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw Error(ErrorKind::kUsage, "--only selects no suite; known suites:" + known);
  }
  VerifyReport report;
  report.suites.resize(selected.size());
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(selected.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      report.suites[i] = run_suite(selected[i], opts);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < selected.size(); i = next++)
        report.suites[i] = run_suite(selected[i], opts);
    });
  }
  for (auto& th : pool) th.join();
  return report;
}

}  // namespace exlie
