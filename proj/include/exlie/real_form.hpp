#pragma once

// Registry of the twelve non-compact exceptional real forms with their
// Satake diagrams, and the restricted root systems computed from them.

#include <string>
#include <utility>
#include <vector>

#include "exlie/exact_arith.hpp"
#include "exlie/root_system.hpp"

namespace exlie {

struct SatakeDiagram {
  std::string complex_type;                  // "E6", "F4", ...
  std::vector<int> black;                    // sorted node labels
  std::vector<std::pair<int, int>> arrows;   // white pairs (i < j)

  bool is_black(int node) const;
  int tau(int node) const;  // arrow partner, or the node itself
  // Throws kInconsistent when arrows touch black nodes, repeat a node, or
  // do not preserve the diagram.
  void validate(const RootSystem& rs) const;
};

struct RealForm {
  std::string label;   // "E6(6)"
  std::string roman;   // "EI"
  SatakeDiagram satake;
  int dim_g = 0;
  int dim_K = 0;
  int dim_P = 0;
  int dim_Npm = 0;
  std::string m0_label;          // compact reductive part of the minimal Levi
  bool has_discrete_series = false;  // informational: rank K = rank g
  // Maximal-parabolic index j (1-based position) -> orbit of simple nodes
  // removed for P_j.  This also fixes the order of the restricted simple
  // roots.  `pin_note` records why the order is what it is.
  std::vector<std::vector<int>> parabolic_nodes;
  std::string pin_note;

  int split_rank() const { return static_cast<int>(parabolic_nodes.size()); }
  const RootSystem& roots() const { return root_system(satake.complex_type); }
};

// The twelve registered forms in the order E6(6), E6(2), E6(-14), E6(-26),
// E7(7), E7(-5), E7(-25), E8(8), E8(-24), F4(4), F4(-20), G2(2).
const std::vector<RealForm>& registry();
// Accepts "E6(6)", "E6(-14)" (ASCII or Unicode minus), "E_{6(6)}" and the
// Roman names "EI" ... "G".  Throws kUnknownLabel.
const RealForm& find_form(const std::string& label);
// Same lookup against an arbitrary registry (e.g. one loaded from JSON).
const RealForm& find_form(const std::vector<RealForm>& forms, const std::string& label);
std::string normalize_form_label(const std::string& label);

struct RestrictedRoot {
  std::vector<int> coords;   // over the restricted simple roots
  Vec vector;                // Satake projection in ambient coordinates
  int multiplicity = 0;
  Rational relative_length;  // squared length / longest squared length
  bool positive() const;
};

struct RestrictedRootSystem {
  std::string form;
  int split_rank = 0;
  std::vector<Vec> restricted_simple;  // ambient projections of the simple restricted roots
  std::vector<std::vector<int>> cartan;
  std::vector<RestrictedRoot> roots;   // nonzero restrictions, positives first
  std::string reduced_type;            // "F4", "BC1", "C3", ...
  int zero_restrictions = 0;           // complex roots restricting to zero
  int positive_multiplicity_sum() const;
  bool non_reduced() const { return reduced_type.rfind("BC", 0) == 0; }
  // Index of the root with the given coordinates, or -1.
  int find(const std::vector<int>& coords) const;
};

// Coordinates of each complex root (in `roots().all_roots` order) over the
// restricted simple roots: the sum of its simple-root coefficients over each
// orbit in `parabolic_nodes`.
std::vector<std::vector<int>> restriction_coords(const RealForm& form);
// Satake projection of an ambient vector: average over the arrow involution,
// then remove the orthogonal projection onto the span of the black roots.
Vec satake_projection(const RealForm& form, const Vec& v);

RestrictedRootSystem restricted_root_system(const RealForm& form);

// dim g - 2 dim N - r; throws kInconsistent when it disagrees with the
// dimension of the registered M0 label.
int dim_m0(const RealForm& form);
// The same dimension computed from the roots: rank + #{roots restricting to 0} - r.
int dim_m0_from_roots(const RealForm& form);

// Registry self-consistency problems (empty when consistent): Satake
// validity, dim K + dim P = dim g, multiplicity sum = dim N, dim M0 checks.
std::vector<std::string> registry_problems(const RealForm& form);

}  // namespace exlie
