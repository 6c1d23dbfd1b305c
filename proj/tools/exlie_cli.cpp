// Command-line entry point: every module behind one binary, with JSON,
// table and CSV output.  Exit codes: 0 success, 1 verification mismatch,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exlie/composition_algebra.hpp"
#include "exlie/error.hpp"
#include "exlie/fts.hpp"
#include "exlie/jordan_core.hpp"
#include "exlie/parabolic.hpp"
#include "exlie/real_form.hpp"
#include "exlie/registry_io.hpp"
#include "exlie/relations.hpp"
#include "exlie/root_system.hpp"
#include "exlie/symmetry_dims.hpp"
#include "exlie/tables.hpp"
#include "exlie/verify.hpp"

namespace {

using nlohmann::json;
using namespace exlie;

constexpr const char* kSchemaVersion = "1.0";

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json payload;
  Table table;
  int exit_code = 0;
};

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, ",");
}

// Key/value table for payloads without a natural row structure.
Table kv_table(const json& payload) {
  Table t{{"key", "value"}, {}};
  for (auto it = payload.begin(); it != payload.end(); ++it) t.rows.push_back({it.key(), cell(*it)});
  return t;
}

int table_width() {
  if (const char* c = std::getenv("COLUMNS")) {
    try {
      int w = std::stoi(c);
      if (w >= 20) return w;
    } catch (...) {
    }
  }
  return 120;
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

std::string fit(const std::string& s, std::size_t width) {
  if (display_width(s) <= width) return s + std::string(width - display_width(s), ' ');
  std::string out;
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char ch = s[i];
    if ((ch & 0xC0) != 0x80) {
      if (n + 1 >= width) break;
      ++n;
    }
    out.push_back(s[i]);
  }
  while (!out.empty() && (static_cast<unsigned char>(out.back()) & 0xC0) == 0xC0) out.pop_back();
  return out + "~" + std::string(width > n + 1 ? width - n - 1 : 0, ' ');
}

void print_table(const Table& t, std::ostream& os) {
  const std::size_t cols = t.headers.size();
  std::vector<std::size_t> w(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) w[c] = display_width(t.headers[c]);
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < cols && c < r.size(); ++c) w[c] = std::max(w[c], display_width(r[c]));
  // Shrink the widest column until the table fits the terminal width.
  const std::size_t limit = static_cast<std::size_t>(table_width());
  auto total = [&] {
    std::size_t s = cols ? 3 * (cols - 1) : 0;
    for (auto x : w) s += x;
    return s;
  };
  while (total() > limit) {
    auto it = std::max_element(w.begin(), w.end());
    if (*it <= 4) break;
    --*it;
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < cols; ++c) {
      s += fit(c < r.size() ? r[c] : "", w[c]);
      if (c + 1 < cols) s += " | ";
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  line(t.headers);
  std::string rule;
  for (std::size_t c = 0; c < cols; ++c) rule += std::string(w[c], '-') + (c + 1 < cols ? "-+-" : "");
  os << rule << "\n";
  for (const auto& r : t.rows) line(r);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void print_csv(const Table& t, std::ostream& os) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_field(r[c]);
    os << "\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
}

// ---------------------------------------------------------------- context

struct Context {
  std::vector<RealForm> forms;
  bool custom_registry = false;
  std::uint64_t seed = 42;
  int jobs = 1;

  const RealForm& form(const std::string& label) const { return find_form(forms, label); }
};

json rational_vec(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json identity_json(const std::vector<IdentityCount>& counts, int& failures) {
  json a = json::array();
  for (const auto& c : counts) {
    a.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    failures += c.failed;
  }
  return a;
}

Table identity_table(const json& ids) {
  Table t{{"identity", "passed", "failed"}, {}};
  for (const auto& i : ids)
    t.rows.push_back({i["name"], std::to_string(i["passed"].get<int>()),
                      std::to_string(i["failed"].get<int>())});
  return t;
}

// ---------------------------------------------------------------- commands

Output cmd_algebra(const std::string& name) {
  const CALabel l = parse_ca_label(name);
  const CompositionAlgebra& a = algebra(l);
  const Signature sig = signature(a.norm_gram());
  Output out;
  json table = json::array();
  out.table.headers.push_back("*");
  for (int j = 0; j < a.dim(); ++j) out.table.headers.push_back("e" + std::to_string(j));
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    std::vector<std::string> trow{"e" + std::to_string(i)};
    for (int j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      std::string s = (p.sign > 0 ? "+e" : "-e") + std::to_string(p.index);
      row.push_back(s);
      trow.push_back(s);
    }
    table.push_back(row);
    out.table.rows.push_back(trow);
  }
  out.payload = {{"label", to_string(l)},
                 {"dim", a.dim()},
                 {"split", ca_is_split(l)},
                 {"norm_signature", {{"positive", sig.positive}, {"negative", sig.negative}}},
                 {"products", table}};
  return out;
}

Output cmd_jordan(const Context& ctx, const std::string& name, bool identities, int trials) {
  const JordanDescriptor d = parse_descriptor(name);
  auto alg = jordan(d);
  Output out;
  out.payload = {{"algebra", to_string(d)},
                 {"dim", alg->dim()},
                 {"degree", alg->degree()},
                 {"identity", rational_vec(alg->identity())}};
  if (alg->is_cubic()) {
    const Signature sig = signature(alg->trace_gram());
    out.payload["trace_form_signature"] = {{"positive", sig.positive},
                                           {"negative", sig.negative}};
  }
  if (identities) {
    int failures = 0;
    out.payload["trials"] = trials;
    out.payload["seed"] = ctx.seed;
    out.payload["identities"] = identity_json(jordan_identity_suite(*alg, trials, ctx.seed), failures);
    out.table = identity_table(out.payload["identities"]);
    out.exit_code = failures ? 1 : 0;
  } else {
    out.table = kv_table(out.payload);
  }
  return out;
}

Output cmd_fts(const Context& ctx, const std::string& name, bool identities, int trials) {
  FreudenthalTripleSystem f(jordan(parse_descriptor(name)));
  Output out;
  out.payload = {{"algebra", to_string(f.algebra()->descriptor())},
                 {"dim", f.dim()},
                 {"sympl_rank", rank(f.sympl_gram())}};
  if (identities) {
    int failures = 0;
    out.payload["trials"] = trials;
    out.payload["seed"] = ctx.seed;
    out.payload["identities"] = identity_json(fts_identity_suite(f, trials, ctx.seed), failures);
    out.table = identity_table(out.payload["identities"]);
    out.exit_code = failures ? 1 : 0;
  } else {
    out.table = kv_table(out.payload);
  }
  return out;
}

Output cmd_symmetry_report(const std::string& name) {
  const SymmetryReport r = symmetry_report(parse_descriptor(name));
  Output out;
  out.payload = {{"algebra", to_string(r.algebra)}, {"dim_j", r.dim_j},
                 {"dim_der", r.dim_der},            {"dim_str", r.dim_str},
                 {"dim_center", r.dim_center},      {"dim_scalings", r.dim_scalings},
                 {"dim_str0", r.dim_str0},          {"dim_conf", r.dim_conf}};
  out.payload["dim_qconf"] = r.dim_qconf ? json(*r.dim_qconf) : json(nullptr);
  if (r.table1_labels) {
    const auto& l = *r.table1_labels;
    out.payload["table1_labels"] = {{"aut", l[0]}, {"str0", l[1]}, {"conf", l[2]}, {"qconf", l[3]}};
  }
  out.table = kv_table(out.payload);
  return out;
}

Output cmd_symmetry_table1() {
  const Table1Verification v = verify_table1();
  Output out;
  json checks = json::array();
  out.table.headers = {"subject", "label", "expected", "computed", "ok"};
  for (const auto& c : v.checks) {
    checks.push_back({{"subject", c.subject}, {"label", c.label}, {"expected", c.expected},
                      {"computed", c.computed}, {"ok", c.ok()}});
    out.table.rows.push_back({c.subject, c.label, std::to_string(c.expected),
                              std::to_string(c.computed), c.ok() ? "yes" : "NO"});
  }
  out.payload = {{"checks", checks}, {"failures", v.failures()}};
  out.exit_code = v.failures() ? 1 : 0;
  return out;
}

Output cmd_roots(const std::string& type) {
  const RootSystem& rs = root_system(type);
  Output out;
  int positive = 0;
  int highest = -1, height = -1;
  for (int i = 0; i < rs.num_roots(); ++i) {
    if (!rs.is_positive(i)) continue;
    ++positive;
    int h = 0;
    for (int c : rs.coefficients[i]) h += c;
    if (h > height) height = h, highest = i;
  }
  std::vector<std::string> lengths;
  for (int v = 1; v <= rs.rank; ++v) lengths.push_back(to_string(rs.node_length(v)));
  out.payload = {{"type", rs.type},
                 {"rank", rs.rank},
                 {"dim", rs.dim()},
                 {"num_roots", rs.num_roots()},
                 {"num_positive", positive},
                 {"cartan", rs.cartan},
                 {"highest_root", rs.coefficients[highest]},
                 {"simple_root_lengths", lengths}};
  out.table = kv_table(out.payload);
  return out;
}

json form_summary(const RealForm& f) {
  return {{"label", f.label},          {"roman", f.roman},
          {"complex_type", f.satake.complex_type}, {"split_rank", f.split_rank()},
          {"dim_g", f.dim_g},          {"dim_K", f.dim_K},
          {"dim_P", f.dim_P},          {"dim_Npm", f.dim_Npm},
          {"m0", f.m0_label}};
}

Output cmd_realform_list(const Context& ctx) {
  Output out;
  out.payload = json::array();
  out.table.headers = {"form", "roman", "type", "r", "dim g", "dim K", "dim P", "dim N", "M0"};
  for (const auto& f : ctx.forms) {
    out.payload.push_back(form_summary(f));
    out.table.rows.push_back({f.label, f.roman, f.satake.complex_type,
                              std::to_string(f.split_rank()), std::to_string(f.dim_g),
                              std::to_string(f.dim_K), std::to_string(f.dim_P),
                              std::to_string(f.dim_Npm), f.m0_label});
  }
  return out;
}

Output cmd_realform_info(const Context& ctx, const std::string& label) {
  const RealForm& f = ctx.form(label);
  Output out;
  out.payload = form_to_json(f);
  const auto problems = registry_problems(f);
  out.payload["problems"] = problems;
  out.table = kv_table(out.payload);
  out.exit_code = problems.empty() ? 0 : 1;
  return out;
}

Output cmd_realform_restricted(const Context& ctx, const std::string& label) {
  const RealForm& f = ctx.form(label);
  const RestrictedRootSystem rr = restricted_root_system(f);
  Output out;
  json roots = json::array();
  out.table.headers = {"coords", "multiplicity", "relative length"};
  for (const auto& r : rr.roots) {
    if (!r.positive()) continue;
    roots.push_back({{"coords", r.coords},
                     {"multiplicity", r.multiplicity},
                     {"relative_length", to_string(r.relative_length)}});
    out.table.rows.push_back({join_ints(r.coords), std::to_string(r.multiplicity),
                              to_string(r.relative_length)});
  }
  out.payload = {{"form", f.label},
                 {"split_rank", rr.split_rank},
                 {"reduced_type", rr.reduced_type},
                 {"cartan", rr.cartan},
                 {"positive_multiplicity_sum", rr.positive_multiplicity_sum()},
                 {"zero_restrictions", rr.zero_restrictions},
                 {"positive_roots", roots}};
  return out;
}

json parabolic_json(const ParabolicSubalgebra& p) {
  json j = {{"form", p.form},
            {"theta", p.theta},
            {"levi_factors", p.levi_factors},
            {"levi", p.levi_label()},
            {"abelian_rank", p.abelian_rank},
            {"dim_a", p.dim_a_theta},
            {"dim_m", p.dim_m_theta},
            {"dim_n", p.dim_n_theta},
            {"removed_simple_nodes", p.removed_simple_nodes}};
  if (p.deleted_node) j["j"] = *p.deleted_node;
  return j;
}

Output cmd_parabolic_max(const Context& ctx, const std::string& label) {
  const RealForm& f = ctx.form(label);
  Output out;
  out.payload = json::array();
  out.table.headers = {"j", "Levi", "abelian", "dim M", "dim N", "grading", "long/short"};
  for (const auto& p : maximal_parabolics(f)) {
    json row = parabolic_json(p);
    const GradingProfile g = grading_profile(f, *p.deleted_node);
    json grades = json::object();
    std::vector<std::string> gs;
    for (auto [k, d] : g.grades)
      if (k > 0) {
        grades[std::to_string(k)] = d;
        gs.push_back(std::to_string(k) + ":" + std::to_string(d));
      }
    row["grading"] = {{"depth", g.depth}, {"positive_grades", grades}, {"dim_g0", g.grades.at(0)}};
    std::string ls;
    try {
      auto c = long_short_counts(f, *p.deleted_node);
      row["long_short"] = {c.long_count, c.short_count};
      ls = "(" + std::to_string(c.long_count) + "," + std::to_string(c.short_count) + ")";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNotApplicable) throw;
    }
    out.payload.push_back(row);
    out.table.rows.push_back({std::to_string(*p.deleted_node), p.levi_label(),
                              std::to_string(p.abelian_rank), std::to_string(p.dim_m_theta),
                              std::to_string(p.dim_n_theta),
                              std::to_string(2 * g.depth + 1) + ": " + join(gs, " "), ls});
  }
  return out;
}

Output cmd_parabolic_all(const Context& ctx, const std::string& label) {
  const RealForm& f = ctx.form(label);
  Output out;
  out.payload = json::array();
  out.table.headers = {"theta", "Levi", "abelian", "dim M", "dim A", "dim N", "bookkeeping"};
  for (const auto& p : all_standard_parabolics(f)) {
    const bool ok = p.dim_m_theta + p.dim_a_theta + 2 * p.dim_n_theta == f.dim_g;
    json row = parabolic_json(p);
    row["bookkeeping_ok"] = ok;
    if (!ok) out.exit_code = 1;
    out.payload.push_back(row);
    out.table.rows.push_back({"{" + join_ints(p.theta) + "}", p.levi_label(),
                              std::to_string(p.abelian_rank), std::to_string(p.dim_m_theta),
                              std::to_string(p.dim_a_theta), std::to_string(p.dim_n_theta),
                              ok ? "ok" : "MISMATCH"});
  }
  return out;
}

Output cmd_parabolic_grading(const Context& ctx, const std::string& label, int j) {
  const RealForm& f = ctx.form(label);
  const GradingProfile g = grading_profile(f, j);
  Output out;
  json grades = json::object();
  out.table.headers = {"k", "dim g^k"};
  for (auto [k, d] : g.grades) {
    grades[std::to_string(k)] = d;
    out.table.rows.push_back({std::to_string(k), std::to_string(d)});
  }
  out.payload = {{"form", f.label}, {"j", j}, {"depth", g.depth}, {"grades", grades},
                 {"total", g.total()}, {"positive_sum", g.positive_sum()}};
  return out;
}

json member_json(const RelatedMember& m) {
  return {{"form", m.form}, {"j", m.j}, {"levi_factors", m.levi_factors}, {"levi", m.levi},
          {"abelian_rank", m.abelian_rank}, {"form_roles", m.form_roles},
          {"levi_roles", m.levi_roles}};
}

json class_json(const RelatedClass& c) {
  json members = json::array(), extra = json::array(), missing = json::array();
  for (const auto& m : c.members) members.push_back(member_json(m));
  for (const auto& m : c.extra) extra.push_back(member_json(m));
  for (const auto& m : c.missing) missing.push_back({{"form", m.form}, {"levi", m.levi}});
  json j = {{"complex_type", c.complex_type},
            {"complexified_levi", c.complexified_levi.to_string()},
            {"dim_n", c.dim_n},
            {"members", members},
            {"exact_match", c.exact_match},
            {"missing", missing},
            {"extra", extra},
            {"notes", c.notes}};
  j["row_id"] = c.row_id ? json(*c.row_id) : json(nullptr);
  return j;
}

Output cmd_related_enumerate(const Context& ctx) {
  const RelatedSweep s = enumerate_max_related(ctx.forms);
  Output out;
  json classes = json::array(), beyond = json::array();
  out.table.headers = {"row", "M^C", "dim N", "members", "match"};
  auto add_row = [&](const RelatedClass& c, const std::string& id) {
    std::vector<std::string> ms;
    for (const auto& m : c.members) ms.push_back(m.form + " P" + std::to_string(m.j) + " " + m.levi);
    std::string match = c.exact_match ? "exact" : "partial";
    if (!c.row_id) match = "beyond table";
    for (const auto& m : c.missing) match += "; missing " + m.form + " " + m.levi;
    out.table.rows.push_back({id, c.complexified_levi.to_string(), std::to_string(c.dim_n),
                              join(ms, "; "), match});
  };
  for (const auto& c : s.classes) {
    classes.push_back(class_json(c));
    add_row(c, std::to_string(*c.row_id));
  }
  for (const auto& c : s.beyond_table) {
    beyond.push_back(class_json(c));
    add_row(c, "-");
  }
  out.payload = {{"maximal_parabolics", s.maximal_parabolics},
                 {"classes", classes},
                 {"beyond_table", beyond},
                 {"unmatched_rows", s.unmatched_rows},
                 {"all_rows_exact", s.all_rows_exact()}};
  return out;
}

Output cmd_related_check(const Context& ctx, const std::string& f1, int j1, const std::string& f2,
                         int j2) {
  const auto p1 = maximal_parabolic(ctx.form(f1), j1);
  const auto p2 = maximal_parabolic(ctx.form(f2), j2);
  const bool rel = parabolically_related(p1, p2);
  Output out;
  out.payload = {{"related", rel},
                 {"first", parabolic_json(p1)},
                 {"second", parabolic_json(p2)},
                 {"first_complexified_levi", complexified_levi(p1).to_string()},
                 {"second_complexified_levi", complexified_levi(p2).to_string()}};
  out.table = {{"form", "j", "Levi", "M^C", "dim N"},
               {{p1.form, std::to_string(j1), p1.levi_label(), complexified_levi(p1).to_string(),
                 std::to_string(p1.dim_n_theta)},
                {p2.form, std::to_string(j2), p2.levi_label(), complexified_levi(p2).to_string(),
                 std::to_string(p2.dim_n_theta)},
                {"related", rel ? "yes" : "no", "", "", ""}}};
  return out;
}

json role_json(const JordanRole& r) {
  json j = {{"role", to_string(r.spec.kind)}, {"algebra", r.spec.algebra},
            {"extra", r.spec.extra},          {"text", r.spec.text()},
            {"label", r.label},               {"label_dim", r.label_dim},
            {"registry_only", r.registry_only}, {"verified", r.verified()}};
  j["computed_dim"] = r.computed_dim ? json(*r.computed_dim) : json(nullptr);
  return j;
}

Output cmd_interpret(const std::string& label) {
  const auto roles = jordan_interpretation(label);
  Output out;
  json a = json::array();
  out.table.headers = {"role", "stands for", "label dim", "computed dim", "status"};
  for (const auto& r : roles) {
    a.push_back(role_json(r));
    std::string status = r.registry_only ? "unverified (registry only)"
                         : r.verified()  ? "verified"
                                         : "MISMATCH";
    if (!r.registry_only && !r.verified()) out.exit_code = 1;
    out.table.rows.push_back({r.spec.text(), r.label, std::to_string(r.label_dim),
                              r.computed_dim ? std::to_string(*r.computed_dim) : "-", status});
  }
  out.payload = {{"label", label}, {"roles", a}};
  return out;
}

Output cmd_verify_all(const Context& ctx, const std::vector<std::string>& only, int trials,
                      bool verbose) {
  VerifyOptions o;
  o.seed = ctx.seed;
  o.trials = trials;
  o.jobs = ctx.jobs;
  o.only = only;
  if (ctx.custom_registry) o.forms = &ctx.forms;
  const VerifyReport rep = verify_all(o);
  Output out;
  json suites = json::array();
  out.table.headers = {"suite", "passed", "failed", "status"};
  int passed = 0;
  for (const auto& s : rep.suites) {
    json j = {{"name", s.name}, {"module", s.module}, {"passed", s.passed()},
              {"failed", s.failed()}, {"failures", s.failures}, {"notes", s.notes}};
    if (verbose) {
      json items = json::array();
      for (const auto& i : s.items)
        items.push_back({{"subject", i.subject}, {"passed", i.passed}, {"failed", i.failed}});
      j["items"] = items;
    }
    suites.push_back(j);
    passed += s.passed();
    out.table.rows.push_back({s.name, std::to_string(s.passed()), std::to_string(s.failed()),
                              s.ok() ? "ok" : "FAIL"});
    for (const auto& f : s.failures) out.table.rows.push_back({"  " + f, "", "", ""});
  }
  out.payload = {{"seed", ctx.seed},      {"trials", trials},
                 {"suites", suites},      {"total_passed", passed},
                 {"total_failed", rep.failed()}, {"ok", rep.ok()}};
  out.exit_code = rep.ok() ? 0 : 1;
  return out;
}

Output cmd_dump_registry(const Context& ctx) {
  Output out;
  out.payload = registry_document(ctx.forms);
  out.table = {{"section", "entries"}, {}};
  for (auto it = out.payload.begin(); it != out.payload.end(); ++it)
    out.table.rows.push_back({it.key(), std::to_string(it->size())});
  return out;
}

int emit(const Output& out, const std::string& command, const std::string& format,
         const Context& ctx) {
  if (format == "json") {
    json doc = {{"schema_version", kSchemaVersion},
                {"command", command},
                {"payload", out.payload},
                {"registry_hash", registry_hash(ctx.forms)}};
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(out.table, std::cout);
  } else {
    print_table(out.table, std::cout);
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional real Lie algebras: Jordan algebras, real forms, parabolics"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  std::string format = "json";
  std::string registry_file;
  Context ctx;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for randomized property trials")->capture_default_str();
  app.add_option("--jobs", ctx.jobs, "Parallel suites for verify-all")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--registry", registry_file, "Load the real-form registry from a JSON file");

  std::string name, form, form2, label, type = "E8";
  int node = 0, node2 = 0, trials = 100;
  bool identities = false, verbose = false, max_only = true;
  std::vector<std::string> only;
  std::string command;
  std::function<Output()> action;

  auto* alg = app.add_subcommand("algebra", "Composition algebra multiplication table");
  alg->add_option("--name,name", name, "R, C, H, O, Cs, Hs or Os")->required();
  alg->callback([&] { command = "algebra"; action = [&] { return cmd_algebra(name); }; });

  auto* jor = app.add_subcommand("jordan", "Jordan algebra data and identity trials");
  jor->add_option("--algebra,algebra", name, "R, R+Gamma(m,n), J3(A), J12(A), Gamma(m,n), J2(A)")
      ->required();
  jor->add_flag("--identities", identities, "Run the randomized identity suite");
  jor->add_option("--trials", trials)->check(CLI::PositiveNumber);
  jor->callback([&] {
    command = "jordan";
    action = [&] { return cmd_jordan(ctx, name, identities, trials); };
  });

  auto* fts = app.add_subcommand("fts", "Freudenthal triple system data and identity trials");
  fts->add_option("--algebra,algebra", name, "Cubic Jordan algebra")->required();
  fts->add_flag("--identities", identities, "Run the randomized identity suite");
  fts->add_option("--trials", trials)->check(CLI::PositiveNumber);
  fts->callback([&] {
    command = "fts";
    action = [&] { return cmd_fts(ctx, name, identities, trials); };
  });

  auto* sym = app.add_subcommand("symmetry", "Symmetry algebra dimensions");
  sym->require_subcommand(1);
  auto* sym_rep = sym->add_subcommand("report", "der/str/str0/conf/qconf of one algebra");
  sym_rep->add_option("--algebra,algebra", name)->required();
  sym_rep->callback([&] {
    command = "symmetry report";
    action = [&] { return cmd_symmetry_report(name); };
  });
  auto* sym_t1 = sym->add_subcommand("verify-table1", "Check every tabulated dimension");
  sym_t1->callback([&] {
    command = "symmetry verify-table1";
    action = [&] { return cmd_symmetry_table1(); };
  });

  auto* roots = app.add_subcommand("roots", "Root systems");
  roots->require_subcommand(1);
  auto* roots_info = roots->add_subcommand("info", "Root system summary");
  roots_info->add_option("--type,type", type, "E6, E7, E8, F4, G2, An, Bn, Cn, Dn")->required();
  roots_info->callback([&] { command = "roots info"; action = [&] { return cmd_roots(type); }; });

  auto* rf = app.add_subcommand("realform", "Registered real forms");
  rf->require_subcommand(1);
  rf->add_subcommand("list", "All registered forms")->callback([&] {
    command = "realform list";
    action = [&] { return cmd_realform_list(ctx); };
  });
  auto* rf_info = rf->add_subcommand("info", "Registry entry of one form");
  rf_info->add_option("--form,form", form)->required();
  rf_info->callback([&] {
    command = "realform info";
    action = [&] { return cmd_realform_info(ctx, form); };
  });
  auto* rf_res = rf->add_subcommand("restricted", "Restricted roots with multiplicities");
  rf_res->add_option("--form,form", form)->required();
  rf_res->callback([&] {
    command = "realform restricted";
    action = [&] { return cmd_realform_restricted(ctx, form); };
  });

  auto* par = app.add_subcommand("parabolic", "Standard parabolic subalgebras");
  par->require_subcommand(1);
  auto* par_max = par->add_subcommand("max", "Maximal parabolics of a form");
  par_max->add_option("--form,form", form)->required();
  par_max->callback([&] {
    command = "parabolic max";
    action = [&] { return cmd_parabolic_max(ctx, form); };
  });
  auto* par_all = par->add_subcommand("all", "All standard parabolics of a form");
  par_all->add_option("--form,form", form)->required();
  par_all->callback([&] {
    command = "parabolic all";
    action = [&] { return cmd_parabolic_all(ctx, form); };
  });
  auto* par_gr = par->add_subcommand("grading", "Grading induced by a maximal parabolic");
  par_gr->add_option("--form,form", form)->required();
  par_gr->add_option("--node,node", node)->required();
  par_gr->callback([&] {
    command = "parabolic grading";
    action = [&] { return cmd_parabolic_grading(ctx, form, node); };
  });

  auto* rel = app.add_subcommand("related", "Parabolic relatedness");
  rel->require_subcommand(1);
  auto* rel_en = rel->add_subcommand("enumerate", "Classes of maximally related forms");
  rel_en->add_flag("--max", max_only, "Maximal parabolics (the only supported mode)");
  rel_en->callback([&] {
    command = "related enumerate";
    action = [&] { return cmd_related_enumerate(ctx); };
  });
  auto* rel_ch = rel->add_subcommand("check", "Decide relatedness of two maximal parabolics");
  rel_ch->add_option("--form1", form)->required();
  rel_ch->add_option("--node1", node)->required();
  rel_ch->add_option("--form2", form2)->required();
  rel_ch->add_option("--node2", node2)->required();
  rel_ch->callback([&] {
    command = "related check";
    action = [&] { return cmd_related_check(ctx, form, node, form2, node2); };
  });

  auto* interp = app.add_subcommand("interpret", "Jordan-algebraic roles of a Lie algebra label");
  interp->add_option("--label,label", label)->required();
  interp->callback([&] { command = "interpret"; action = [&] { return cmd_interpret(label); }; });

  auto* ver = app.add_subcommand("verify-all", "Run every golden and property suite");
  ver->add_option("--only", only, "Modules or suites to run")->delimiter(',');
  ver->add_option("--trials", trials, "Random trials per property")->check(CLI::PositiveNumber);
  ver->add_flag("--verbose", verbose, "Include per-item counts");
  ver->callback([&] {
    command = "verify-all";
    action = [&] { return cmd_verify_all(ctx, only, trials, verbose); };
  });

  app.add_subcommand("dump-registry", "Embedded registries as JSON")->callback([&] {
    command = "dump-registry";
    action = [&] { return cmd_dump_registry(ctx); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!registry_file.empty()) {
      std::ifstream in(registry_file);
      if (!in) throw Error(ErrorKind::kUsage, "cannot read registry file " + registry_file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::kUsage, std::string("registry file is not JSON: ") + e.what());
      }
      ctx.forms = forms_from_json(j);
      ctx.custom_registry = true;
    } else {
      ctx.forms = registry();
    }
    return emit(action(), command, format, ctx);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kUsage:
      case ErrorKind::kUnknownLabel:
      case ErrorKind::kInvalidIndex:
      case ErrorKind::kUnsupported:
      case ErrorKind::kAlgebraMismatch: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
