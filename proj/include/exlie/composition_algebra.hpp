#pragma once

// Composition algebras R, C, H, O and the split forms Cs, Hs, Os built by
// iterated Cayley–Dickson doubling.

#include <string>
#include <vector>

#include "exlie/exact_arith.hpp"

namespace exlie {

enum class CALabel { R, C, H, O, Cs, Hs, Os };

const std::vector<CALabel>& all_ca_labels();
std::string to_string(CALabel label);
CALabel parse_ca_label(const std::string& text);  // throws kUsage
int ca_dim(CALabel label);
bool ca_is_split(CALabel label);

class CompositionAlgebra {
 public:
  // Basis products are signed basis vectors: e_i·e_j = sign(i,j)·e_{index(i,j)}.
  struct Product {
    int index;
    int sign;
  };

  CALabel label() const { return label_; }
  int dim() const { return q_; }
  const Product& product(int i, int j) const { return table_[i * q_ + j]; }
  // Coefficient vector of e_i·e_j (the structure-constant view).
  Vec mult_table_entry(int i, int j) const;
  int conj_sign(int i) const { return conj_[i]; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec conjugate(const Vec& a) const;
  Rational real_part(const Vec& a) const { return a[0]; }
  Rational norm(const Vec& a) const;           // real part of a·conj(a)
  Rational norm_bilinear(const Vec& a, const Vec& b) const;  // n(a+b)−n(a)−n(b)
  RatMatrix norm_gram() const;                 // Gram matrix of n on the basis

  friend CompositionAlgebra build_algebra(CALabel label);

 private:
  CALabel label_ = CALabel::R;
  int q_ = 1;
  std::vector<Product> table_;
  std::vector<int> conj_;
};

// Division doubling uses γ = −1 at every step; split labels flip the last
// step to γ = +1.  Built tables are cached; the returned reference is
// immutable and safe to share between threads.
CompositionAlgebra build_algebra(CALabel label);
const CompositionAlgebra& algebra(CALabel label);

// Element wrapper carrying its label so that mixed-algebra products are
// detected.
struct CAElement {
  CALabel label;
  Vec coords;
};

CAElement multiply(const CAElement& a, const CAElement& b);  // kAlgebraMismatch
CAElement conjugate(const CAElement& a);
Rational real_part(const CAElement& a);
Rational norm(const CAElement& a);

}  // namespace exlie
