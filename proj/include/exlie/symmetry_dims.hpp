#pragma once

// Symmetry algebras of Jordan algebras by exact linear algebra: derivations
// (Leibniz kernel), structure algebra, its centre, and the conformal and
// quasi-conformal dimensions from the 3- and 5-grading formulas.

#include <optional>
#include <string>
#include <vector>

#include "exlie/jordan_core.hpp"
#include "exlie/lie_labels.hpp"

namespace exlie {

struct DerivationBasis {
  int dim_j = 0;
  // Each operator is a dim_j × dim_j matrix flattened row-major:
  // entry (a, b) at a·dim_j + b, with D e_b = Σ_a D_ab e_a.
  std::vector<Vec> operators;
  int dim() const { return static_cast<int>(operators.size()); }
};

DerivationBasis derivation_algebra(const CubicJordanAlgebra& j);

struct StructureDims {
  int dim_str = 0;
  int dim_center = 0;   // computed centre of str
  int dim_scalings = 0; // span of L_{c_k} over the units c_k of the simple summands
  int dim_str0 = 0;     // str modulo the summand scalings
};
StructureDims structure_algebra(const CubicJordanAlgebra& j, const DerivationBasis& der);

struct SymmetryReport {
  JordanDescriptor algebra;
  int dim_j = 0;
  int dim_der = 0;
  int dim_str = 0;
  int dim_center = 0;
  int dim_scalings = 0;
  int dim_str0 = 0;
  int dim_conf = 0;                // 2·dim J + dim str
  std::optional<int> dim_qconf;    // cubic kinds: dim conf + 1 + 2·(2·dim J + 2) + 2
  // Magic-square labels for the row this algebra belongs to (empty when the
  // algebra is not a tabulated row).
  std::optional<std::vector<std::string>> table1_labels;  // aut, str0, conf, qconf
};

// Results are memoized per descriptor; thread-safe.
SymmetryReport symmetry_report(const JordanDescriptor& d);

// Magic-square rows: labels (aut, str0, conf, qconf) as tabulated.
struct Table1Row {
  std::string row;  // "R", "R+Gamma(m,n)", "J3(R)", ...
  std::string aut, str0, conf, qconf;
};
std::vector<Table1Row> table1_rows();
std::optional<Table1Row> table1_row_for(const JordanDescriptor& d);
// The (m,n) samples used for the spin-factor row.
const std::vector<std::pair<int, int>>& spin_samples();

struct DimCheck {
  std::string subject;   // e.g. "J3(O) der"
  std::string label;     // expected Lie label
  long expected = 0;     // label dimension
  long computed = 0;
  bool ok() const { return expected == computed; }
};

struct Table1Verification {
  std::vector<DimCheck> checks;
  int failures() const;
};
Table1Verification verify_table1();

struct EmbeddingCheck {
  std::string subject;
  std::string relation;
  bool ok = false;
};
std::vector<EmbeddingCheck> verify_embedding_dims();

}  // namespace exlie
