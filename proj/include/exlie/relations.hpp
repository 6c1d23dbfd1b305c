#pragma once

// Parabolic relatedness between real forms with a common complexification,
// the tabulated classes of maximally related forms, and the Jordan-algebraic
// roles attached to their members.

#include <optional>
#include <string>
#include <vector>

#include "exlie/lie_labels.hpp"
#include "exlie/parabolic.hpp"

namespace exlie {

// Complex type of the Levi factor M (semisimple part plus abelian rank).
ComplexType complexified_levi(const ParabolicSubalgebra& p);

// Same ambient complex type and isomorphic complexified Levi factors.
// Throws kInconsistent if such a pair has different dim N.
bool parabolically_related(const ParabolicSubalgebra& p1, const ParabolicSubalgebra& p2);

// ---------------------------------------------------------------------------
// Tabulated classes.

struct TabulatedMember {
  std::string form;
  std::string levi;  // as tabulated, "+"-joined
};

struct TabulatedClass {
  int row = 0;
  std::vector<TabulatedMember> members;
  int dim_n = 0;
};
const std::vector<TabulatedClass>& related_table();

// ---------------------------------------------------------------------------
// Jordan-algebraic roles.

enum class RoleKind { kDer, kStr0, kStr, kConf, kQconf, kK, kS, kLiteral };
std::string to_string(RoleKind k);

struct RoleSpec {
  RoleKind kind = RoleKind::kLiteral;
  std::string algebra;  // Jordan descriptor text ("J3(Cs)", "Gamma(7,1)", "M21(O)"),
                        // or the literal Lie label for kLiteral
  std::string extra;    // additional Lie summand ("sl(2,R)", "u(1)"), or empty
  std::string text() const;  // "str0(J3(O))+sl(2,R)"
};

struct JordanRole {
  RoleSpec spec;
  std::string label;           // the Lie algebra the role stands for
  long label_dim = 0;
  std::optional<long> computed_dim;  // absent for registry-only roles
  bool registry_only = false;        // K(.), S(.), M21(O)
  bool verified() const { return computed_dim && *computed_dim == label_dim; }
};

// Dimension of the role algebra plus the extra summand, computed from the
// Jordan algebra; nullopt for registry-only roles.
std::optional<long> role_dimension(const RoleSpec& spec);
JordanRole make_role(const RoleSpec& spec, const std::string& label);

struct InterpretedMember {
  std::string form;
  std::string levi;
  std::vector<RoleSpec> form_roles;
  std::vector<RoleSpec> levi_roles;
};
struct InterpretedClass {
  int row = 0;
  std::vector<InterpretedMember> members;  // same order as `related_table()`
};
const std::vector<InterpretedClass>& interpretation_table();

// Every role carried by the label (a real form or a Levi factor), each with
// its dimension check.  Throws kUnknownLabel if the label has none.
std::vector<JordanRole> jordan_interpretation(const std::string& label);

// All distinct roles of the interpretation table with their checks.
std::vector<JordanRole> all_roles();

// ---------------------------------------------------------------------------
// Exhaustive sweep.

struct RelatedMember {
  std::string form;
  int j = 0;
  std::vector<std::string> levi_factors;
  std::string levi;  // canonical "+"-joined
  int abelian_rank = 0;
  std::vector<std::string> form_roles;  // role texts, when tabulated
  std::vector<std::string> levi_roles;
};

struct RelatedClass {
  std::optional<int> row_id;  // matching tabulated row
  std::string complex_type;   // ambient, e.g. "E7"
  ComplexType complexified_levi;
  int dim_n = 0;
  std::vector<RelatedMember> members;  // ordered by registry, then j
  bool exact_match = false;            // members coincide with the tabulated row
  std::vector<TabulatedMember> missing;  // tabulated but not realized
  std::vector<RelatedMember> extra;      // realized but not tabulated
  std::vector<std::string> notes;
  int distinct_forms() const;
};

struct RelatedSweep {
  std::vector<RelatedClass> classes;      // nontrivial classes matched to a row, by row
  std::vector<RelatedClass> beyond_table; // nontrivial classes without a row
  std::vector<int> unmatched_rows;        // rows without any realized class
  int maximal_parabolics = 0;
  bool all_rows_exact() const;
};

// Pairs all maximal parabolics of the given forms; nontrivial classes have
// members from at least two distinct forms.
RelatedSweep enumerate_max_related(const std::vector<RealForm>& forms);
RelatedSweep enumerate_max_related();

}  // namespace exlie
