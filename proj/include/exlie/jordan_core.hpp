#pragma once

// Cubic Jordan algebras built from a cubic norm by the
// Freudenthal–Springer–Tits construction, plus two quadratic (degree-2)
// Jordan algebras used when interpreting Levi factors.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "exlie/composition_algebra.hpp"
#include "exlie/exact_arith.hpp"

namespace exlie {

struct JordanDescriptor {
  enum class Kind {
    kRealField,      // R, N(x) = x³
    kSpinFactor,     // R ⊕ Γ_{m,n}, N = ξ·η(γ,γ)
    kHermitian3,     // J3^A
    kLorentzian12,   // J_{1,2}^A, η-Hermitian 3×3 matrices
    kQuadraticSpin,  // Γ_{m,n} as a quadratic Jordan algebra (degree 2)
    kHermitian2,     // J2^A, Hermitian 2×2 matrices (degree 2)
  };
  Kind kind = Kind::kRealField;
  int m = 0;
  int n = 0;
  CALabel label = CALabel::R;

  bool operator==(const JordanDescriptor&) const = default;

  static JordanDescriptor real_field() { return {}; }
  static JordanDescriptor spin_factor(int m, int n) {
    return {Kind::kSpinFactor, m, n, CALabel::R};
  }
  static JordanDescriptor hermitian3(CALabel a) { return {Kind::kHermitian3, 0, 0, a}; }
  static JordanDescriptor lorentzian12(CALabel a) {
    return {Kind::kLorentzian12, 0, 0, a};
  }
  static JordanDescriptor quadratic_spin(int m, int n) {
    return {Kind::kQuadraticSpin, m, n, CALabel::R};
  }
  static JordanDescriptor hermitian2(CALabel a) { return {Kind::kHermitian2, 0, 0, a}; }
};

// Text forms: "R", "R+Gamma(m,n)" (alias "Spin(m,n)"), "J3(A)" (alias
// "J3A"), "J12(A)" (alias "J12A"), "Gamma(m,n)", "J2(A)" (alias "J2A").
JordanDescriptor parse_descriptor(const std::string& text);  // kUsage
std::string to_string(const JordanDescriptor& d);
int jordan_dim(const JordanDescriptor& d);  // kUnsupported when invalid
// Degree of the generic minimal polynomial: 3 for cubic kinds, 2 for the
// quadratic kinds.
int jordan_degree(const JordanDescriptor& d);

class CubicJordanAlgebra {
 public:
  struct Term {
    std::uint32_t index;
    Rational coef;
  };
  struct TriTerm {
    std::uint16_t i, j, k;
    Rational coef;
  };

  const JordanDescriptor& descriptor() const { return desc_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_cubic() const { return degree_ == 3; }
  const Vec& identity() const { return identity_; }
  // e_i∘e_j as a sparse coefficient list.
  const std::vector<Term>& circ_entry(int i, int j) const {
    return circ_[static_cast<std::size_t>(i * dim_ + j)];
  }
  // Fully symmetric trilinear tensor of the norm, all orderings stored.
  const std::vector<TriTerm>& norm_tensor() const { return tensor_; }

  // Degree-3 apparatus (kUnsupported on quadratic kinds).
  Rational cubic_norm(const Vec& x) const;
  Rational cubic_polarization(const Vec& x, const Vec& y, const Vec& z) const;
  // The linear form Z ↦ N(X,Y,Z) as its coefficient vector.
  Vec polarization_form(const Vec& x, const Vec& y) const;
  Rational trace(const Vec& x) const;                    // 3N(c,c,X)
  Rational quad_S(const Vec& x) const;                   // 3N(X,X,c)
  Rational bilin_S(const Vec& x, const Vec& y) const;    // 6N(X,Y,c)
  Rational trace_form(const Vec& x, const Vec& y) const; // Tr X Tr Y − S(X,Y)
  const RatMatrix& trace_gram() const { return gram_; }
  Vec sharp(const Vec& x) const;
  Vec cross(const Vec& x, const Vec& y) const;

  // Quadratic-kind data: Q and its full polarization Q(X+Y)−Q(X)−Q(Y).
  Rational quadratic_norm(const Vec& x) const;
  Rational quadratic_polarization(const Vec& x, const Vec& y) const;

  // Available on every kind.
  Vec circ(const Vec& x, const Vec& y) const;
  Vec triple(const Vec& x, const Vec& y, const Vec& z) const;
  Vec u_op(const Vec& x, const Vec& y) const;
  Vec v_op(const Vec& x, const Vec& y, const Vec& z) const;
  // Matrix of the left multiplication L_X (column j = X∘e_j).
  RatMatrix left_mult(const Vec& x) const;
  // Matrix of U_X.
  RatMatrix u_matrix(const Vec& x) const;

  friend CubicJordanAlgebra build_jordan(const JordanDescriptor& desc);

 private:
  void require_cubic(const char* what) const;

  JordanDescriptor desc_;
  int dim_ = 1;
  int degree_ = 3;
  Vec identity_;
  std::vector<std::vector<Term>> circ_;
  std::vector<TriTerm> tensor_;
  RatMatrix gram_;
  RatMatrix gram_inv_;
  RatMatrix quad_;  // Gram of the quadratic polarization (quadratic kinds)
};

// Throws kUnsupported for invalid descriptors (e.g. m+n = 0, Γ with m = 0).
CubicJordanAlgebra build_jordan(const JordanDescriptor& desc);
// Cached, thread-safe shared instance.
std::shared_ptr<const CubicJordanAlgebra> jordan(const JordanDescriptor& desc);

// Element wrapper used at API boundaries where mixing algebras must be
// rejected.
struct JordanElement {
  std::shared_ptr<const CubicJordanAlgebra> algebra;
  Vec coords;
};
JordanElement make_element(std::shared_ptr<const CubicJordanAlgebra> alg, Vec coords);

// Matrix realizations.  Entries are composition-algebra coordinate vectors.
using CAMatrix = std::vector<std::vector<Vec>>;
// For kHermitian3, kLorentzian12 and kHermitian2.
CAMatrix to_matrix(const JordanDescriptor& d, const Vec& x);
Vec from_matrix(const JordanDescriptor& d, const CAMatrix& m);
CAMatrix matrix_product(CALabel label, const CAMatrix& a, const CAMatrix& b);
// ½(XY + YX) computed on matrices; the reference product for the matrix kinds.
Vec matrix_jordan_product(const JordanDescriptor& d, const Vec& x, const Vec& y);

// Randomized identity suite.  Each check is an exact equality evaluated on
// fresh random rational inputs drawn from a std::mt19937_64 seeded with
// `seed`; identities that do not apply to the algebra's kind are skipped.
struct IdentityCount {
  std::string name;
  int passed = 0;
  int failed = 0;
};
std::vector<IdentityCount> jordan_identity_suite(const CubicJordanAlgebra& alg, int trials,
                                                 std::uint64_t seed);

}  // namespace exlie
