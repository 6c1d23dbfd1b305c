#pragma once

// Exact root systems of types A–G: simple roots in orthonormal ambient
// models, full root enumeration by reflection closure, Cartan matrices and
// Dynkin classification of simple-root subsets.
//
// Node numbering.  Classical types use Bourbaki numbering.  The exceptional
// types E6, E7, E8 use the numbering of the Satake-diagram tables in this
// project: the nodes along the long chain are 1..n-1 and the node attached
// at the branch point carries the last label.  F4 uses Bourbaki numbering,
// and for G2 node 1 is the long root and node 2 the short one.  The
// translation to Bourbaki numbering is `bourbaki_index`.

#include <string>
#include <vector>

#include "exlie/exact_arith.hpp"

namespace exlie {

struct RootSystem {
  std::string type;   // "E6", "F4", "A5", ...
  char family = 'A';
  int rank = 0;
  std::vector<Vec> simple_roots;                  // ambient coordinates
  std::vector<Vec> all_roots;                     // ambient coordinates
  std::vector<std::vector<int>> coefficients;     // per root, over simple roots
  std::vector<std::vector<int>> cartan;           // cartan[i][j] = <a_i, a_j^v>
  RatMatrix gram;                                 // (a_i, a_j)
  std::vector<int> bourbaki_index;                // node i (0-based) -> Bourbaki label (1-based)

  int dim() const { return rank + static_cast<int>(all_roots.size()); }
  int num_roots() const { return static_cast<int>(all_roots.size()); }
  // Squared length of root `index` relative to the longest root length.
  Rational relative_length(int index) const;
  bool is_long(int index) const { return relative_length(index) == 1; }
  bool is_positive(int index) const;
  // Index of the root with the given simple-root coefficients, or -1.
  int find(const std::vector<int>& coeffs) const;
  // Simple-node squared length relative to the longest root.
  Rational node_length(int node) const;  // node is 1-based
};

// Supported: A1.., B2.., C2.., D4.., E6, E7, E8, F4, G2.  Throws kUnsupported.
RootSystem build_root_system(const std::string& type);
// Cached shared instance (thread-safe).
const RootSystem& root_system(const std::string& type);

// A connected component of the Dynkin diagram induced on a node subset.
// `nodes` lists the member nodes (1-based) in Bourbaki order for the
// component's own type:
//   A_n  chain from one end (the end with the smaller node label first),
//   B_n  chain ending at the short node, C_n chain ending at the long node
//        (rank 2 with a double bond is reported as B2, long node first),
//   D_n  chain c_1..c_{n-2} ending at the branch node, then the two legs
//        (for D4 the leaf with the smallest label is taken as c_1),
//   E_n  Bourbaki order (1-3-4-5-..-n chain, 2 attached to 4; for E6 the
//        length-two arm containing the smaller label gives nodes 1 and 3),
//   F4   long end first, G2 short node first.
struct DynkinComponent {
  char family = 'A';
  int rank = 0;
  std::vector<int> nodes;
  std::string label() const;  // "A4", "E7", ...
};

// Throws kUnclassified for shapes that are not finite-type Dynkin diagrams.
std::vector<DynkinComponent> dynkin_components(const RootSystem& rs,
                                               const std::vector<int>& nodes);
// Sorted multiset of component labels, e.g. {"A1", "A4"}.
std::vector<std::string> classify_subsystem(const RootSystem& rs,
                                            const std::vector<int>& nodes);

// For each root (in `all_roots` order) the sum of its coefficients on the
// given nodes (1-based).  A single node gives the usual grading by n_j.
std::vector<int> grade_vector(const RootSystem& rs, const std::vector<int>& nodes);
std::vector<int> grade_vector(const RootSystem& rs, int node);

}  // namespace exlie
