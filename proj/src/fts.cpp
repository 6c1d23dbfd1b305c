#include "exlie/fts.hpp"

#include <array>

#include "exlie/error.hpp"

namespace exlie {

namespace {

void same_algebra(const FTSElement& x, const FTSElement& y) {
  if (x.algebra != y.algebra &&
      !(x.algebra && y.algebra && x.algebra->descriptor() == y.algebra->descriptor())) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "FTS elements over different Jordan algebras");
  }
}

}  // namespace

FTSElement operator+(const FTSElement& x, const FTSElement& y) {
  same_algebra(x, y);
  return {x.algebra, x.alpha + y.alpha, x.beta + y.beta, add(x.A, y.A), add(x.B, y.B)};
}

FTSElement operator-(const FTSElement& x, const FTSElement& y) {
  same_algebra(x, y);
  return {x.algebra, x.alpha - y.alpha, x.beta - y.beta, sub(x.A, y.A), sub(x.B, y.B)};
}

FTSElement operator*(const Rational& s, const FTSElement& x) {
  return {x.algebra, s * x.alpha, s * x.beta, scale(s, x.A), scale(s, x.B)};
}

bool operator==(const FTSElement& x, const FTSElement& y) {
  return x.alpha == y.alpha && x.beta == y.beta && x.A == y.A && x.B == y.B;
}

FreudenthalTripleSystem::FreudenthalTripleSystem(
    std::shared_ptr<const CubicJordanAlgebra> j)
    : j_(std::move(j)) {
  if (!j_->is_cubic()) {
    throw Error(ErrorKind::kUnsupported,
                "Freudenthal triple system needs a cubic Jordan algebra, got " +
                    to_string(j_->descriptor()));
  }
  int n = dim();
  omega_ = RatMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) omega_.at(a, b) = sympl(basis(a), basis(b));
  auto inv = inverse(omega_.transpose());
  if (!inv) throw Error(ErrorKind::kInconsistent, "degenerate symplectic form");
  omega_t_inv_ = *inv;
}

void FreudenthalTripleSystem::check(const FTSElement& x) const {
  if (x.algebra != j_ && !(x.algebra && x.algebra->descriptor() == j_->descriptor())) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "element does not belong to F(" + to_string(j_->descriptor()) + ")");
  }
}

FTSElement FreudenthalTripleSystem::zero() const {
  return {j_, 0, 0, Vec(j_->dim()), Vec(j_->dim())};
}

FTSElement FreudenthalTripleSystem::element(Rational alpha, Rational beta, Vec A,
                                            Vec B) const {
  if (static_cast<int>(A.size()) != j_->dim() || static_cast<int>(B.size()) != j_->dim()) {
    throw Error(ErrorKind::kUsage, "FTS element components must have dimension " +
                                       std::to_string(j_->dim()));
  }
  return {j_, std::move(alpha), std::move(beta), std::move(A), std::move(B)};
}

Vec FreudenthalTripleSystem::to_vec(const FTSElement& x) const {
  Vec v;
  v.reserve(dim());
  v.push_back(x.alpha);
  v.push_back(x.beta);
  v.insert(v.end(), x.A.begin(), x.A.end());
  v.insert(v.end(), x.B.begin(), x.B.end());
  return v;
}

FTSElement FreudenthalTripleSystem::from_vec(const Vec& v) const {
  int d = j_->dim();
  if (static_cast<int>(v.size()) != dim()) {
    throw Error(ErrorKind::kUsage, "flat FTS vector must have length " + std::to_string(dim()));
  }
  return {j_, v[0], v[1], Vec(v.begin() + 2, v.begin() + 2 + d),
          Vec(v.begin() + 2 + d, v.end())};
}

FTSElement FreudenthalTripleSystem::random(std::mt19937_64& rng) const {
  return from_vec(random_vec(rng, dim()));
}

FTSElement FreudenthalTripleSystem::basis(int b) const { return from_vec(unit_vec(dim(), b)); }

Rational FreudenthalTripleSystem::sympl(const FTSElement& x, const FTSElement& y) const {
  check(x);
  check(y);
  return x.alpha * y.beta - x.beta * y.alpha + j_->trace_form(x.A, y.B) -
         j_->trace_form(x.B, y.A);
}

Rational FreudenthalTripleSystem::kappa(const FTSElement& x) const {
  check(x);
  return (x.alpha * x.beta - j_->trace_form(x.A, x.B)) / 2;
}

Rational FreudenthalTripleSystem::quartic(const FTSElement& x) const {
  Rational k = kappa(x);
  Rational inner = x.alpha * j_->cubic_norm(x.A) + x.beta * j_->cubic_norm(x.B) + k * k -
                   j_->trace_form(j_->sharp(x.A), j_->sharp(x.B));
  return -4 * inner;
}

Rational FreudenthalTripleSystem::quartic_linearization(const FTSElement& x1,
                                                        const FTSElement& x2,
                                                        const FTSElement& x3,
                                                        const FTSElement& x4) const {
  std::array<const FTSElement*, 4> x = {&x1, &x2, &x3, &x4};
  for (const FTSElement* e : x) check(*e);
  const CubicJordanAlgebra& J = *j_;

  // αN(A) + βN(B): each variable in turn supplies the scalar.
  Rational cubic_terms = 0;
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> o{};
    for (int j = 0, k = 0; j < 4; ++j)
      if (j != i) o[k++] = j;
    if (sgn(x[i]->alpha) != 0)
      cubic_terms += x[i]->alpha * J.cubic_polarization(x[o[0]]->A, x[o[1]]->A, x[o[2]]->A);
    if (sgn(x[i]->beta) != 0)
      cubic_terms += x[i]->beta * J.cubic_polarization(x[o[0]]->B, x[o[1]]->B, x[o[2]]->B);
  }
  cubic_terms /= 4;

  // κ²: symmetric bilinear k(x,y) paired over the three perfect matchings.
  auto k = [&](int a, int b) -> Rational {
    return (x[a]->alpha * x[b]->beta + x[b]->alpha * x[a]->beta -
            J.trace_form(x[a]->A, x[b]->B) - J.trace_form(x[b]->A, x[a]->B)) /
           4;
  };
  Rational kappa_sq = (k(0, 1) * k(2, 3) + k(0, 2) * k(1, 3) + k(0, 3) * k(1, 2)) / 3;

  // Tr(A♯, B♯): A♯ polarizes to ½A×A'.  Sum over the six ordered splits.
  Rational sharp_term = 0;
  static const std::array<std::array<int, 4>, 6> kSplits = {{
      {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}}};
  for (const auto& s : kSplits) {
    Vec a = J.cross(x[s[0]]->A, x[s[1]]->A);
    if (is_zero(a)) continue;
    Vec b = J.cross(x[s[2]]->B, x[s[3]]->B);
    sharp_term += J.trace_form(a, b);
  }
  sharp_term /= 24;  // (1/6) · ½ · ½

  return -4 * (cubic_terms + kappa_sq - sharp_term);
}

Vec FreudenthalTripleSystem::linear_form(const FTSElement& x0, const FTSElement& x1,
                                         const FTSElement& x2) const {
  // The same three summands as quartic_linearization, read off as linear
  // functionals of the fourth argument z = (α_z, β_z, A_z, B_z).
  std::array<const FTSElement*, 3> x = {&x0, &x1, &x2};
  for (const FTSElement* e : x) check(*e);
  const CubicJordanAlgebra& J = *j_;
  const RatMatrix& G = J.trace_gram();
  int d = J.dim();
  Rational fa = 0, fb = 0;
  Vec fA(d), fB(d);

  // Cubic terms, weight 1/4.
  Rational q = make_rational(1, 4);
  fa += q * J.cubic_polarization(x[0]->A, x[1]->A, x[2]->A);
  fb += q * J.cubic_polarization(x[0]->B, x[1]->B, x[2]->B);
  for (int i = 0; i < 3; ++i) {
    const FTSElement& u = *x[(i + 1) % 3];
    const FTSElement& v = *x[(i + 2) % 3];
    if (sgn(x[i]->alpha) != 0)
      fA = add(fA, scale(q * x[i]->alpha, J.polarization_form(u.A, v.A)));
    if (sgn(x[i]->beta) != 0)
      fB = add(fB, scale(q * x[i]->beta, J.polarization_form(u.B, v.B)));
  }

  // κ² term: (1/3)[k01·k(2,z) + k02·k(1,z) + k12·k(0,z)].
  auto k = [&](int a, int b) -> Rational {
    return (x[a]->alpha * x[b]->beta + x[b]->alpha * x[a]->beta -
            J.trace_form(x[a]->A, x[b]->B) - J.trace_form(x[b]->A, x[a]->B)) /
           4;
  };
  std::array<Rational, 3> partner = {k(1, 2), k(0, 2), k(0, 1)};
  for (int i = 0; i < 3; ++i) {
    if (sgn(partner[i]) == 0) continue;
    Rational c = partner[i] / 12;  // (1/3)·(1/4)
    fa += c * x[i]->beta;
    fb += c * x[i]->alpha;
    fA = sub(fA, scale(c, G * x[i]->B));
    fB = sub(fB, scale(c, G * x[i]->A));
  }

  // Tr(A♯,B♯) term, weight −1/24 per ordered split; Tr(P×Z, Q) = 6N(P,Z,Q).
  Vec sA(d), sB(d);
  auto acc = [&](Vec& target, const Vec& p, const Vec& other_cross) {
    if (is_zero(p) || is_zero(other_cross)) return;
    target = add(target, scale(6, J.polarization_form(p, other_cross)));
  };
  acc(sB, x[2]->B, J.cross(x[0]->A, x[1]->A));  // {0,1 | 2,z}
  acc(sB, x[1]->B, J.cross(x[0]->A, x[2]->A));  // {0,2 | 1,z}
  acc(sB, x[0]->B, J.cross(x[1]->A, x[2]->A));  // {1,2 | 0,z}
  acc(sA, x[0]->A, J.cross(x[1]->B, x[2]->B));  // {0,z | 1,2}
  acc(sA, x[1]->A, J.cross(x[0]->B, x[2]->B));  // {1,z | 0,2}
  acc(sA, x[2]->A, J.cross(x[0]->B, x[1]->B));  // {2,z | 0,1}
  Rational w = make_rational(1, 24);
  fA = sub(fA, scale(w, sA));
  fB = sub(fB, scale(w, sB));

  Vec r;
  r.reserve(dim());
  r.push_back(-4 * fa);
  r.push_back(-4 * fb);
  for (const Rational& v : fA) r.push_back(-4 * v);
  for (const Rational& v : fB) r.push_back(-4 * v);
  return r;
}

FTSElement FreudenthalTripleSystem::triple_T(const FTSElement& x, const FTSElement& y,
                                             const FTSElement& w) const {
  Vec rhs = scale(2, linear_form(x, y, w));
  // Σ_a t_a Ω_ab = rhs_b  ⇔  Ωᵀ t = rhs.
  return from_vec(omega_t_inv_ * rhs);
}

Rational FreudenthalTripleSystem::efts_norm(const EFTSPoint& p) const {
  return quartic(p.x) - p.phi * p.phi;
}

Rational FreudenthalTripleSystem::quartic_distance(const EFTSPoint& p,
                                                   const EFTSPoint& q) const {
  Rational s = p.phi - q.phi + sympl(p.x, q.x);
  return quartic(p.x - q.x) - s * s;
}

std::vector<IdentityCount> fts_identity_suite(const FreudenthalTripleSystem& f, int trials,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IdentityCount> out;
  auto check = [&out](const std::string& name, bool ok) {
    for (auto& c : out) {
      if (c.name == name) {
        (ok ? c.passed : c.failed)++;
        return;
      }
    }
    out.push_back({name, ok ? 1 : 0, ok ? 0 : 1});
  };
  // Nondegeneracy is a property of the form, checked once per suite.
  check("sympl_nondegenerate",
        rank(f.sympl_gram()) == static_cast<std::size_t>(f.dim()));
  for (int t = 0; t < trials; ++t) {
    FTSElement x = f.random(rng), y = f.random(rng), w = f.random(rng);
    Rational lambda = random_rational(rng), mu = random_rational(rng);
    Rational phi = random_rational(rng);
    check("sympl_antisymmetry", f.sympl(x, y) == -f.sympl(y, x) && f.sympl(x, x) == 0);
    check("sympl_bilinearity",
          f.sympl(lambda * x + mu * w, y) == lambda * f.sympl(x, y) + mu * f.sympl(w, y));
    Rational dx = f.quartic(x);
    Rational l2 = lambda * lambda;
    check("quartic_homogeneity", f.quartic(lambda * x) == l2 * l2 * dx);
    check("linearization_diagonal", f.quartic_linearization(x, x, x, x) == dx);
    FTSElement txxx = f.triple_T(x, x, x);
    check("triple_diagonal", f.sympl(txxx, x) == 2 * dx);
    FTSElement txyw = f.triple_T(x, y, w);
    check("triple_symmetry", txyw == f.triple_T(y, x, w) && txyw == f.triple_T(w, y, x) &&
                                 txyw == f.triple_T(x, w, y));
    EFTSPoint p{x, phi};
    EFTSPoint origin{f.zero(), 0};
    check("distance_to_origin", f.quartic_distance(p, origin) == f.efts_norm(p));
    check("distance_diagonal", f.quartic_distance(p, p) == 0);
  }
  return out;
}

}  // namespace exlie
