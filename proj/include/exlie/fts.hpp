#pragma once

// Freudenthal triple systems F(J) = R ⊕ R ⊕ J ⊕ J over a cubic Jordan
// algebra, and the extended system F(J) ⊕ R with its quartic norm.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "exlie/jordan_core.hpp"

namespace exlie {

struct FTSElement {
  std::shared_ptr<const CubicJordanAlgebra> algebra;
  Rational alpha;
  Rational beta;
  Vec A;
  Vec B;
};

struct EFTSPoint {
  FTSElement x;
  Rational phi;
};

class FreudenthalTripleSystem {
 public:
  // kUnsupported unless the algebra is cubic.
  explicit FreudenthalTripleSystem(std::shared_ptr<const CubicJordanAlgebra> j);

  const std::shared_ptr<const CubicJordanAlgebra>& algebra() const { return j_; }
  int dim() const { return 2 * j_->dim() + 2; }

  FTSElement zero() const;
  FTSElement element(Rational alpha, Rational beta, Vec A, Vec B) const;  // kUsage
  // Flat layout [α, β, A, B].
  Vec to_vec(const FTSElement& x) const;
  FTSElement from_vec(const Vec& v) const;
  FTSElement random(std::mt19937_64& rng) const;

  Rational sympl(const FTSElement& x, const FTSElement& y) const;
  Rational kappa(const FTSElement& x) const;
  Rational quartic(const FTSElement& x) const;
  // Symmetric quadrilinear form with Δ(x,x,x,x) = Δ(x), by closed expansion.
  Rational quartic_linearization(const FTSElement& x, const FTSElement& y,
                                 const FTSElement& w, const FTSElement& z) const;
  // The element with {T(x,y,w), z} = 2Δ(x,y,w,z) for all z.
  FTSElement triple_T(const FTSElement& x, const FTSElement& y,
                      const FTSElement& w) const;
  // Gram matrix of {·,·} on the flat basis.
  const RatMatrix& sympl_gram() const { return omega_; }

  Rational efts_norm(const EFTSPoint& p) const;
  Rational quartic_distance(const EFTSPoint& p, const EFTSPoint& q) const;

 private:
  void check(const FTSElement& x) const;
  // Coefficients r with r·to_vec(z) = Δ(x,y,w,z).
  Vec linear_form(const FTSElement& x, const FTSElement& y, const FTSElement& w) const;
  FTSElement basis(int b) const;

  std::shared_ptr<const CubicJordanAlgebra> j_;
  RatMatrix omega_;
  RatMatrix omega_t_inv_;  // (Ωᵀ)⁻¹
};

FTSElement operator+(const FTSElement& x, const FTSElement& y);
FTSElement operator-(const FTSElement& x, const FTSElement& y);
FTSElement operator*(const Rational& s, const FTSElement& x);
bool operator==(const FTSElement& x, const FTSElement& y);

std::vector<IdentityCount> fts_identity_suite(const FreudenthalTripleSystem& f, int trials,
                                              std::uint64_t seed);

}  // namespace exlie
