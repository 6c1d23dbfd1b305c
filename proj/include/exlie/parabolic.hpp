#pragma once

// Standard and maximal parabolic subalgebras of the registered real forms:
// Langlands data, Levi real-form labels from Satake subdiagrams, gradings
// induced by maximal parabolics, and long/short root counts.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exlie/real_form.hpp"

namespace exlie {

struct ParabolicSubalgebra {
  std::string form;
  std::vector<int> theta;                  // restricted simple indices kept (1-based, sorted)
  std::vector<std::string> levi_factors;   // simple (or compact simple) real-form labels of M
  int abelian_rank = 0;                    // abelian summands of M (u(1), so(2), so(1,1))
  int dim_a_theta = 0;
  int dim_n_theta = 0;
  int dim_m_theta = 0;                     // computed from the roots
  bool is_maximal = false;
  std::optional<int> deleted_node;         // j for maximal parabolics
  std::vector<int> removed_simple_nodes;   // complex simple roots outside M

  long levi_label_dim() const;             // sum of factor dimensions + abelian rank
  std::string levi_label() const;          // canonical "+"-joined factors ("0" if none)
};

struct LeviClassification {
  std::vector<std::string> factors;
  int abelian_rank = 0;
};

// Satake-subdiagram classification of M_theta.  Throws kUnclassified when a
// component shape is not in the lookup, kInvalidIndex for bad theta.
LeviClassification classify_levi(const RealForm& form, const std::vector<int>& theta);

ParabolicSubalgebra standard_parabolic(const RealForm& form, const std::vector<int>& theta);
ParabolicSubalgebra maximal_parabolic(const RealForm& form, int j);
std::vector<ParabolicSubalgebra> maximal_parabolics(const RealForm& form);
// All 2^r standard parabolics, theta enumerated as bitmasks 0 .. 2^r - 1.
std::vector<ParabolicSubalgebra> all_standard_parabolics(const RealForm& form);

struct GradingProfile {
  int deleted_node = 0;
  std::map<int, int> grades;  // k -> dim g^k, all k with g^k != 0
  int depth = 0;              // max |k|
  int total() const;
  int positive_sum() const;   // sum over k >= 1
};
GradingProfile grading_profile(const RealForm& form, int j);

struct LengthCounts {
  int long_count = 0;
  int short_count = 0;
  int medium_count = 0;  // only for non-reduced (BC) systems of rank >= 2
};
// Positive restricted roots in N_j by length class, counted with
// multiplicity.  Throws kNotApplicable for single-length restricted systems.
LengthCounts long_short_counts(const RealForm& form, int j);

}  // namespace exlie
