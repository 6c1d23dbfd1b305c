#include "exlie/relations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exlie/error.hpp"
#include "exlie/jordan_core.hpp"
#include "exlie/symmetry_dims.hpp"

namespace exlie {

namespace {

std::vector<LieTerm> levi_terms(const ParabolicSubalgebra& p) {
  std::vector<LieTerm> terms;
  for (const auto& f : p.levi_factors) {
    auto t = parse_lie_label(f);
    terms.insert(terms.end(), t.begin(), t.end());
  }
  return terms;
}

// Full Levi label of M including its compact torus, canonical spelling.
std::string full_levi_label(const ParabolicSubalgebra& p) {
  auto terms = levi_terms(p);
  for (int i = 0; i < p.abelian_rank; ++i) terms.push_back(parse_lie_label("u(1)").front());
  return canonical_label(terms);
}

std::string ambient_type(const std::string& form) { return find_form(form).satake.complex_type; }

RoleSpec role(RoleKind k, std::string algebra, std::string extra = "") {
  return RoleSpec{k, std::move(algebra), std::move(extra)};
}

}  // namespace

ComplexType complexified_levi(const ParabolicSubalgebra& p) {
  ComplexType c = complexify(levi_terms(p));
  c.abelian_rank += p.abelian_rank;
  return c;
}

bool parabolically_related(const ParabolicSubalgebra& p1, const ParabolicSubalgebra& p2) {
  if (ambient_type(p1.form) != ambient_type(p2.form)) return false;
  if (!(complexified_levi(p1) == complexified_levi(p2))) return false;
  if (p1.dim_n_theta != p2.dim_n_theta) {
    throw Error(ErrorKind::kInconsistent,
                "related parabolics of " + p1.form + " and " + p2.form + " differ in dim N");
  }
  return true;
}

const std::vector<TabulatedClass>& related_table() {
  static const std::vector<TabulatedClass> rows{
      {1, {{"E6(-14)", "su(5,1)"}, {"E6(6)", "sl(6,R)"}, {"E6(2)", "su(3,3)"}}, 21},
      {2, {{"E6(-14)", "so(7,1)+so(2)"}, {"E6(2)", "so(5,3)+u(1)"}}, 24},
      {3, {{"E6(-26)", "so(9,1)"}, {"E6(6)", "so(5,5)"}}, 16},
      {4, {{"E6(6)", "sl(3,R)+sl(3,R)+sl(2,R)"}, {"E6(2)", "sl(3,C)_R+sl(2,R)"}}, 29},
      {5, {{"E7(-25)", "E6(-26)"}, {"E7(7)", "E6(6)"}}, 27},
      {6,
       {{"E7(-25)", "so(9,1)+sl(2,R)"},
        {"E7(7)", "so(5,5)+sl(2,R)"},
        {"E7(-5)", "so(7,3)+su(2)"}},
       42},
      {7, {{"E7(-25)", "so(10,2)"}, {"E7(7)", "so(6,6)"}, {"E7(-5)", "so*(12)"}}, 33},
      {8, {{"E7(7)", "sl(4,R)+sl(2,R)+sl(3,R)"}, {"E7(-5)", "su*(4)+su(2)+sl(3,R)"}}, 53},
      {9,
       {{"E7(-5)", "su*(6)+sl(2,R)"},
        {"E7(7)", "sl(6,R)+sl(2,R)"},
        {"E7(-25)", "su*(6)+su(2)"}},
       47},
      {10, {{"E8(-24)", "E7(-25)"}, {"E8(8)", "E7(7)"}}, 57},
      {11, {{"E8(-24)", "so(11,3)"}, {"E8(8)", "so(7,7)"}}, 78},
      {12, {{"E8(-24)", "E6(-26)+sl(2,R)"}, {"E8(8)", "E6(6)+sl(2,R)"}}, 83},
      {13, {{"E8(-24)", "so(9,1)+sl(3,R)"}, {"E8(8)", "so(5,5)+sl(3,R)"}}, 97},
      {14, {{"F4(-20)", "so(7)"}, {"F4(4)", "so(4,3)"}}, 15},
  };
  return rows;
}

std::string to_string(RoleKind k) {
  switch (k) {
    case RoleKind::kDer: return "der";
    case RoleKind::kStr0: return "str0";
    case RoleKind::kStr: return "str";
    case RoleKind::kConf: return "conf";
    case RoleKind::kQconf: return "qconf";
    case RoleKind::kK: return "K";
    case RoleKind::kS: return "S";
    case RoleKind::kLiteral: return "literal";
  }
  return "?";
}

std::string RoleSpec::text() const {
  std::string s = kind == RoleKind::kLiteral ? algebra : to_string(kind) + "(" + algebra + ")";
  if (!extra.empty()) s += "+" + extra;
  return s;
}

namespace {

bool is_registry_only(const RoleSpec& spec) {
  return spec.kind == RoleKind::kK || spec.kind == RoleKind::kS ||
         (spec.kind != RoleKind::kLiteral && spec.algebra.rfind("M21", 0) == 0);
}

}  // namespace

std::optional<long> role_dimension(const RoleSpec& spec) {
  if (is_registry_only(spec)) return std::nullopt;
  long extra = spec.extra.empty() ? 0 : lie_dim(spec.extra);
  if (spec.kind == RoleKind::kLiteral) return lie_dim(spec.algebra) + extra;
  const SymmetryReport r = symmetry_report(parse_descriptor(spec.algebra));
  long base = 0;
  switch (spec.kind) {
    case RoleKind::kDer: base = r.dim_der; break;
    case RoleKind::kStr0: base = r.dim_str0; break;
    case RoleKind::kStr: base = r.dim_str; break;
    case RoleKind::kConf: base = r.dim_conf; break;
    case RoleKind::kQconf:
      if (!r.dim_qconf) {
        throw Error(ErrorKind::kUnsupported,
                    "qconf is defined for cubic Jordan algebras only: " + spec.algebra);
      }
      base = *r.dim_qconf;
      break;
    default: break;
  }
  return base + extra;
}

JordanRole make_role(const RoleSpec& spec, const std::string& label) {
  JordanRole r;
  r.spec = spec;
  r.label = label;
  r.label_dim = lie_dim(label);
  r.registry_only = is_registry_only(spec);
  r.computed_dim = role_dimension(spec);
  return r;
}

const std::vector<InterpretedClass>& interpretation_table() {
  using K = RoleKind;
  static const std::vector<InterpretedClass> rows{
      {1,
       {{"E6(-14)", "su(5,1)", {role(K::kConf, "M21(O)")}, {role(K::kLiteral, "su(5,1)")}},
        {"E6(6)", "sl(6,R)", {role(K::kQconf, "J3(Cs)")}, {role(K::kConf, "J3(Cs)")}},
        {"E6(2)", "su(3,3)", {role(K::kQconf, "J3(C)")}, {role(K::kConf, "J3(C)")}}}},
      {2,
       {{"E6(-14)", "so(7,1)+so(2)", {role(K::kConf, "M21(O)")},
         {role(K::kStr0, "Gamma(7,1)", "u(1)")}},
        {"E6(2)", "so(5,3)+u(1)", {role(K::kQconf, "J3(C)")},
         {role(K::kStr0, "Gamma(5,3)", "u(1)")}}}},
      {3,
       {{"E6(-26)", "so(9,1)", {role(K::kStr0, "J3(O)")}, {role(K::kStr0, "J2(O)")}},
        {"E6(6)", "so(5,5)", {role(K::kStr0, "J3(Os)")}, {role(K::kStr0, "J2(Os)")}}}},
      {4,
       {{"E6(6)", "sl(3,R)+sl(3,R)+sl(2,R)", {role(K::kQconf, "J3(Cs)")},
         {role(K::kStr0, "J3(Cs)", "sl(2,R)")}},
        {"E6(2)", "sl(3,C)_R+sl(2,R)", {role(K::kQconf, "J3(C)")},
         {role(K::kStr0, "J3(C)", "sl(2,R)")}}}},
      {5,
       {{"E7(-25)", "E6(-26)", {role(K::kConf, "J3(O)")}, {role(K::kStr0, "J3(O)")}},
        {"E7(7)", "E6(6)", {role(K::kConf, "J3(Os)")}, {role(K::kStr0, "J3(Os)")}}}},
      {6,
       {{"E7(-25)", "so(9,1)+sl(2,R)", {role(K::kConf, "J3(O)")},
         {role(K::kStr0, "J2(O)", "sl(2,R)")}},
        {"E7(7)", "so(5,5)+sl(2,R)", {role(K::kConf, "J3(Os)"), role(K::kQconf, "J3(Hs)")},
         {role(K::kStr0, "J2(Os)", "sl(2,R)")}},
        {"E7(-5)", "so(7,3)+su(2)", {role(K::kQconf, "J3(H)")},
         {role(K::kStr0, "Gamma(7,3)", "su(2)")}}}},
      {7,
       {{"E7(-25)", "so(10,2)", {role(K::kConf, "J3(O)")}, {role(K::kConf, "J2(O)")}},
        {"E7(7)", "so(6,6)", {role(K::kConf, "J3(Os)"), role(K::kQconf, "J3(Hs)")},
         {role(K::kConf, "J2(Os)"), role(K::kConf, "J3(Hs)")}},
        {"E7(-5)", "so*(12)", {role(K::kQconf, "J3(H)")}, {role(K::kConf, "J3(H)")}}}},
      // The tabulated middle summands are written with the q = 4 symbols of
      // the Ã_q / A_q families, i.e. sl(2,R) and su(2).
      {8,
       {{"E7(7)", "sl(4,R)+sl(2,R)+sl(3,R)", {role(K::kQconf, "J3(Hs)")},
         {role(K::kLiteral, "sl(4,R)+sl(2,R)+sl(3,R)")}},
        {"E7(-5)", "su*(4)+su(2)+sl(3,R)", {role(K::kQconf, "J3(H)")},
         {role(K::kLiteral, "su*(4)+su(2)+sl(3,R)")}}}},
      {9,
       {{"E7(-5)", "su*(6)+sl(2,R)", {role(K::kQconf, "J3(H)")},
         {role(K::kStr0, "J3(H)", "sl(2,R)")}},
        {"E7(7)", "sl(6,R)+sl(2,R)", {role(K::kQconf, "J3(Hs)"), role(K::kConf, "J3(Os)")},
         {role(K::kStr0, "J3(Hs)", "sl(2,R)")}},
        {"E7(-25)", "su*(6)+su(2)", {role(K::kConf, "J3(O)")},
         {role(K::kStr0, "J3(H)", "su(2)")}}}},
      {10,
       {{"E8(-24)", "E7(-25)", {role(K::kQconf, "J3(O)")}, {role(K::kConf, "J3(O)")}},
        {"E8(8)", "E7(7)", {role(K::kQconf, "J3(Os)")}, {role(K::kConf, "J3(Os)")}}}},
      {11,
       {{"E8(-24)", "so(11,3)", {role(K::kQconf, "J3(O)")},
         {role(K::kQconf, "R+Gamma(8,0)")}},
        {"E8(8)", "so(7,7)", {role(K::kQconf, "J3(Os)")}, {role(K::kQconf, "R+Gamma(4,4)")}}}},
      {12,
       {{"E8(-24)", "E6(-26)+sl(2,R)", {role(K::kQconf, "J3(O)")},
         {role(K::kStr0, "J3(O)", "sl(2,R)")}},
        {"E8(8)", "E6(6)+sl(2,R)", {role(K::kQconf, "J3(Os)")},
         {role(K::kStr0, "J3(Os)", "sl(2,R)")}}}},
      {13,
       {{"E8(-24)", "so(9,1)+sl(3,R)", {role(K::kQconf, "J3(O)")},
         {role(K::kStr0, "J2(O)", "sl(3,R)")}},
        {"E8(8)", "so(5,5)+sl(3,R)", {role(K::kQconf, "J3(Os)")},
         {role(K::kStr0, "J2(Os)", "sl(3,R)")}}}},
      {14,
       {{"F4(-20)", "so(7)", {role(K::kDer, "J12(O)")}, {role(K::kStr0, "Gamma(7,0)")}},
        {"F4(4)", "so(4,3)", {role(K::kDer, "J12(Os)")}, {role(K::kStr0, "Gamma(4,3)")}}}},
  };
  return rows;
}

namespace {

// Canonical key of a label that may be a registered form ("EI", "E6(6)")
// or a Lie-algebra direct sum.
std::string label_key(const std::string& label) {
  try {
    return canonical_label(label);
  } catch (const Error&) {
    return canonical_label(find_form(label).label);
  }
}

void add_unique(std::vector<JordanRole>& out, const RoleSpec& spec, const std::string& label) {
  for (const auto& r : out)
    if (r.spec.text() == spec.text() && r.label == label) return;
  out.push_back(make_role(spec, label));
}

}  // namespace

std::vector<JordanRole> jordan_interpretation(const std::string& label) {
  std::string key;
  try {
    key = label_key(label);
  } catch (const Error&) {
    throw Error(ErrorKind::kUnknownLabel, "unknown label '" + label + "'");
  }
  std::vector<JordanRole> out;
  for (const auto& row : interpretation_table()) {
    for (const auto& m : row.members) {
      if (canonical_label(m.form) == key)
        for (const auto& s : m.form_roles) add_unique(out, s, m.form);
      if (canonical_label(m.levi) == key)
        for (const auto& s : m.levi_roles) add_unique(out, s, m.levi);
    }
  }
  if (out.empty()) {
    throw Error(ErrorKind::kUnknownLabel, "label '" + label + "' carries no tabulated role");
  }
  return out;
}

std::vector<JordanRole> all_roles() {
  std::vector<JordanRole> out;
  for (const auto& row : interpretation_table()) {
    for (const auto& m : row.members) {
      for (const auto& s : m.form_roles) add_unique(out, s, m.form);
      for (const auto& s : m.levi_roles) add_unique(out, s, m.levi);
    }
  }
  return out;
}

int RelatedClass::distinct_forms() const {
  std::set<std::string> forms;
  for (const auto& m : members) forms.insert(m.form);
  return static_cast<int>(forms.size());
}

bool RelatedSweep::all_rows_exact() const {
  if (!beyond_table.empty() || !unmatched_rows.empty()) return false;
  if (classes.size() != related_table().size()) return false;
  return std::all_of(classes.begin(), classes.end(),
                     [](const RelatedClass& c) { return c.exact_match; });
}

RelatedSweep enumerate_max_related(const std::vector<RealForm>& forms) {
  RelatedSweep sweep;
  // Group maximal parabolics by (ambient type, complexified Levi).
  std::map<std::pair<std::string, std::string>, RelatedClass> groups;
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::string, std::vector<std::string>> levis_of_form;
  for (const auto& f : forms) {
    for (const auto& p : maximal_parabolics(f)) {
      ++sweep.maximal_parabolics;
      RelatedMember m;
      m.form = f.label;
      m.j = *p.deleted_node;
      m.levi_factors = p.levi_factors;
      m.abelian_rank = p.abelian_rank;
      m.levi = full_levi_label(p);
      levis_of_form[f.label].push_back(m.levi);
      const ComplexType c = complexified_levi(p);
      auto key = std::make_pair(f.satake.complex_type, c.to_string());
      auto [it, fresh] = groups.try_emplace(key);
      if (fresh) {
        order.push_back(key);
        it->second.complex_type = f.satake.complex_type;
        it->second.complexified_levi = c;
        it->second.dim_n = p.dim_n_theta;
      } else if (it->second.dim_n != p.dim_n_theta) {
        throw Error(ErrorKind::kInconsistent, "related parabolics differ in dim N");
      }
      it->second.members.push_back(std::move(m));
    }
  }

  std::set<int> matched_rows;
  std::vector<RelatedClass> matched;
  for (const auto& key : order) {
    RelatedClass cls = groups.at(key);
    if (cls.distinct_forms() < 2) continue;
    for (const auto& row : related_table()) {
      std::set<std::pair<std::string, std::string>> tab, got;
      for (const auto& t : row.members) tab.insert({t.form, canonical_label(t.levi)});
      for (const auto& m : cls.members) got.insert({m.form, m.levi});
      bool overlap = std::any_of(got.begin(), got.end(),
                                 [&](const auto& g) { return tab.count(g) > 0; });
      if (!overlap) continue;
      cls.row_id = row.row;
      matched_rows.insert(row.row);
      for (const auto& t : row.members) {
        if (got.count({t.form, canonical_label(t.levi)})) continue;
        cls.missing.push_back(t);
        std::string note = "tabulated member " + t.form + " with Levi factor " + t.levi +
                           " is not realized by a maximal parabolic of " + t.form;
        if (levis_of_form.count(t.form)) {
          note += " (its maximal Levi factors:";
          for (const auto& l : levis_of_form.at(t.form)) note += " " + l + ";";
          note.back() = ')';
        }
        cls.notes.push_back(note);
      }
      for (const auto& m : cls.members)
        if (!tab.count({m.form, m.levi})) cls.extra.push_back(m);
      if (row.dim_n != cls.dim_n) {
        cls.notes.push_back("tabulated dim N " + std::to_string(row.dim_n) + " differs from " +
                            std::to_string(cls.dim_n));
      }
      cls.exact_match = cls.missing.empty() && cls.extra.empty() && row.dim_n == cls.dim_n;
      // Attach the roles of the matching interpreted members.
      for (const auto& irow : interpretation_table()) {
        if (irow.row != row.row) continue;
        for (auto& m : cls.members)
          for (const auto& im : irow.members)
            if (im.form == m.form && canonical_label(im.levi) == m.levi) {
              for (const auto& s : im.form_roles) m.form_roles.push_back(s.text());
              for (const auto& s : im.levi_roles) m.levi_roles.push_back(s.text());
            }
      }
      break;
    }
    if (cls.row_id) {
      matched.push_back(std::move(cls));
    } else {
      sweep.beyond_table.push_back(std::move(cls));
    }
  }
  std::sort(matched.begin(), matched.end(),
            [](const RelatedClass& a, const RelatedClass& b) { return *a.row_id < *b.row_id; });
  sweep.classes = std::move(matched);
  for (const auto& row : related_table())
    if (!matched_rows.count(row.row)) sweep.unmatched_rows.push_back(row.row);
  return sweep;
}

RelatedSweep enumerate_max_related() { return enumerate_max_related(registry()); }

}  // namespace exlie
