#include "exlie/jordan_core.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <regex>
#include <tuple>

#include "exlie/error.hpp"

namespace exlie {

using Kind = JordanDescriptor::Kind;

// ------------------------------------------------------------ descriptors

JordanDescriptor parse_descriptor(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (ch != ' ' && ch != '^' && ch != '_') text.push_back(ch);
  }
  static const std::regex kReal("R");
  static const std::regex kSpin(R"((?:R\+Gamma|Spin)\((\d+),(\d+)\))");
  static const std::regex kGamma(R"(Gamma\((\d+),(\d+)\))");
  static const std::regex kJ3(R"(J3\(?(R|C|H|O|Cs|Hs|Os)\)?)");
  static const std::regex kJ12(R"(J12\(?(R|C|H|O|Cs|Hs|Os)\)?)");
  static const std::regex kJ2(R"(J2\(?(R|C|H|O|Cs|Hs|Os)\)?)");
  std::smatch m;
  if (std::regex_match(text, kReal)) return JordanDescriptor::real_field();
  if (std::regex_match(text, m, kSpin)) {
    return JordanDescriptor::spin_factor(std::stoi(m[1]), std::stoi(m[2]));
  }
  if (std::regex_match(text, m, kGamma)) {
    return JordanDescriptor::quadratic_spin(std::stoi(m[1]), std::stoi(m[2]));
  }
  if (std::regex_match(text, m, kJ3)) {
    return JordanDescriptor::hermitian3(parse_ca_label(m[1]));
  }
  if (std::regex_match(text, m, kJ12)) {
    return JordanDescriptor::lorentzian12(parse_ca_label(m[1]));
  }
  if (std::regex_match(text, m, kJ2)) {
    return JordanDescriptor::hermitian2(parse_ca_label(m[1]));
  }
  throw Error(ErrorKind::kUsage,
              "unknown Jordan algebra '" + raw +
                  "' (expected R, R+Gamma(m,n), J3(A), J12(A), Gamma(m,n) or J2(A))");
}

std::string to_string(const JordanDescriptor& d) {
  std::string mn = "(" + std::to_string(d.m) + "," + std::to_string(d.n) + ")";
  switch (d.kind) {
    case Kind::kRealField: return "R";
    case Kind::kSpinFactor: return "R+Gamma" + mn;
    case Kind::kHermitian3: return "J3(" + to_string(d.label) + ")";
    case Kind::kLorentzian12: return "J12(" + to_string(d.label) + ")";
    case Kind::kQuadraticSpin: return "Gamma" + mn;
    case Kind::kHermitian2: return "J2(" + to_string(d.label) + ")";
  }
  return "?";
}

int jordan_dim(const JordanDescriptor& d) {
  switch (d.kind) {
    case Kind::kRealField: return 1;
    case Kind::kSpinFactor:
      if (d.m < 0 || d.n < 0 || d.m + d.n < 1) break;
      return 1 + d.m + d.n;
    case Kind::kHermitian3:
    case Kind::kLorentzian12: return 3 + 3 * ca_dim(d.label);
    case Kind::kQuadraticSpin:
      if (d.m < 1 || d.n < 0) break;
      return d.m + d.n;
    case Kind::kHermitian2: return 2 + ca_dim(d.label);
  }
  throw Error(ErrorKind::kUnsupported, "unsupported Jordan descriptor " + to_string(d));
}

int jordan_degree(const JordanDescriptor& d) {
  return (d.kind == Kind::kQuadraticSpin || d.kind == Kind::kHermitian2) ? 2 : 3;
}

// ------------------------------------------------------------ construction

namespace {

using Monomials = std::map<std::tuple<int, int, int>, Rational>;

void add_monomial(Monomials& poly, int i, int j, int k, const Rational& c) {
  std::array<int, 3> v = {i, j, k};
  std::sort(v.begin(), v.end());
  poly[{v[0], v[1], v[2]}] += c;
}

// 2·Re(x1 x2 x3) contribution with the three slots starting at given offsets.
void add_real_triple(Monomials& poly, const CompositionAlgebra& a, int o1, int o2,
                     int o3, int sign) {
  int q = a.dim();
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      const auto& p1 = a.product(i, j);
      for (int k = 0; k < q; ++k) {
        const auto& p2 = a.product(p1.index, k);
        if (p2.index != 0) continue;
        add_monomial(poly, o1 + i, o2 + j, o3 + k, 2 * sign * p1.sign * p2.sign);
      }
    }
  }
}

Monomials cubic_monomials(const JordanDescriptor& d) {
  Monomials poly;
  switch (d.kind) {
    case Kind::kRealField:
      add_monomial(poly, 0, 0, 0, 1);
      break;
    case Kind::kSpinFactor:
      for (int a = 0; a < d.m + d.n; ++a) {
        add_monomial(poly, 0, 1 + a, 1 + a, a < d.m ? 1 : -1);
      }
      break;
    case Kind::kHermitian3:
    case Kind::kLorentzian12: {
      const CompositionAlgebra& a = algebra(d.label);
      int q = a.dim();
      bool lor = d.kind == Kind::kLorentzian12;
      add_monomial(poly, 0, 1, 2, 1);
      for (int s = 0; s < 3; ++s) {
        // Hermitian: −α_s n(x_s).  Lorentzian: −a1 n(x1) + a2 n(x2) + a3 n(x3).
        int sign = (lor && s > 0) ? 1 : -1;
        for (int c = 0; c < q; ++c) {
          Rational nc = a.norm(unit_vec(q, c));
          add_monomial(poly, s, 3 + s * q + c, 3 + s * q + c, sign * nc);
        }
      }
      add_real_triple(poly, a, 3, 3 + q, 3 + 2 * q, lor ? -1 : 1);
      break;
    }
    default:
      break;
  }
  return poly;
}

std::vector<CubicJordanAlgebra::TriTerm> tensor_from(const Monomials& poly) {
  std::vector<CubicJordanAlgebra::TriTerm> out;
  for (const auto& [key, coef] : poly) {
    if (sgn(coef) == 0) continue;
    auto [i, j, k] = key;
    std::array<int, 3> v = {i, j, k};
    std::vector<std::array<int, 3>> perms;
    do {
      perms.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    Rational t = coef / static_cast<long>(perms.size());
    for (const auto& p : perms) {
      out.push_back({static_cast<std::uint16_t>(p[0]), static_cast<std::uint16_t>(p[1]),
                     static_cast<std::uint16_t>(p[2]), t});
    }
  }
  return out;
}

// Diagonal quadratic form for the degree-2 kinds, as a symmetric Gram
// matrix B with Q(X) = XᵀBX.
RatMatrix quadratic_gram(const JordanDescriptor& d, int dim) {
  RatMatrix b(dim, dim);
  if (d.kind == Kind::kQuadraticSpin) {
    for (int a = 0; a < dim; ++a) b.at(a, a) = a < d.m ? 1 : -1;
  } else {
    const CompositionAlgebra& a = algebra(d.label);
    b.at(0, 1) = b.at(1, 0) = make_rational(1, 2);
    for (int c = 0; c < a.dim(); ++c) b.at(2 + c, 2 + c) = -a.norm(unit_vec(a.dim(), c));
  }
  return b;
}

std::vector<CubicJordanAlgebra::Term> sparse(const Vec& v) {
  std::vector<CubicJordanAlgebra::Term> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  }
  return out;
}

}  // namespace

CubicJordanAlgebra build_jordan(const JordanDescriptor& desc) {
  CubicJordanAlgebra alg;
  alg.desc_ = desc;
  int d = jordan_dim(desc);
  alg.dim_ = d;
  alg.degree_ = jordan_degree(desc);
  alg.identity_ = Vec(d);
  switch (desc.kind) {
    case Kind::kRealField: alg.identity_[0] = 1; break;
    case Kind::kSpinFactor:
      alg.identity_[0] = desc.m == 0 ? -1 : 1;
      alg.identity_[1] = 1;
      break;
    case Kind::kHermitian3:
    case Kind::kLorentzian12:
      for (int i = 0; i < 3; ++i) alg.identity_[i] = 1;
      break;
    case Kind::kQuadraticSpin: alg.identity_[0] = 1; break;
    case Kind::kHermitian2: alg.identity_[0] = alg.identity_[1] = 1; break;
  }
  alg.circ_.resize(static_cast<std::size_t>(d * d));

  if (alg.degree_ == 3) {
    alg.tensor_ = tensor_from(cubic_monomials(desc));
    // Trace-form Gram matrix and its inverse.
    Vec tr(d);
    std::vector<Vec> s_rows(d, Vec(d));
    const Vec& c = alg.identity_;
    for (const auto& t : alg.tensor_) {
      tr[t.k] += 3 * t.coef * c[t.i] * c[t.j];
      s_rows[t.i][t.j] += 6 * t.coef * c[t.k];
    }
    alg.gram_ = RatMatrix(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) alg.gram_.at(i, j) = tr[i] * tr[j] - s_rows[i][j];
    auto inv = inverse(alg.gram_);
    if (!inv) {
      throw Error(ErrorKind::kInconsistent,
                  "degenerate trace form for " + to_string(desc));
    }
    alg.gram_inv_ = *inv;
    // e_i × e_j = G⁻¹ (6N(e_i, e_j, e_k))_k.
    std::vector<Vec> w(static_cast<std::size_t>(d * d));
    for (const auto& t : alg.tensor_) {
      Vec& v = w[static_cast<std::size_t>(t.i * d + t.j)];
      if (v.empty()) v.assign(d, Rational(0));
      v[t.k] += 6 * t.coef;
    }
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Vec out(d);
        const Vec& wij = w[static_cast<std::size_t>(i * d + j)];
        if (!wij.empty()) out = alg.gram_inv_ * wij;
        // circ = ½(X×Y + Tr X·Y + Tr Y·X − S(X,Y)c)
        out[j] += tr[i];
        out[i] += tr[j];
        for (int k = 0; k < d; ++k) out[k] -= s_rows[i][j] * c[k];
        for (Rational& x : out) x /= 2;
        alg.circ_[static_cast<std::size_t>(i * d + j)] = sparse(out);
      }
    }
  } else {
    alg.quad_ = quadratic_gram(desc, d);
    const Vec& e = alg.identity_;
    // t(X) = Q(X,e) with Q(X,Y) = 2XᵀBY.
    Vec t = alg.quad_ * e;
    for (Rational& x : t) x *= 2;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Vec out(d);
        out[j] += t[i];
        out[i] += t[j];
        Rational qij = 2 * alg.quad_.at(i, j);
        for (int k = 0; k < d; ++k) out[k] -= qij * e[k];
        for (Rational& x : out) x /= 2;
        alg.circ_[static_cast<std::size_t>(i * d + j)] = sparse(out);
      }
    }
  }
  return alg;
}

std::shared_ptr<const CubicJordanAlgebra> jordan(const JordanDescriptor& desc) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CubicJordanAlgebra>> cache;
  std::string key = to_string(desc);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const CubicJordanAlgebra>(build_jordan(desc));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, built).first->second;
}

JordanElement make_element(std::shared_ptr<const CubicJordanAlgebra> alg, Vec coords) {
  if (static_cast<int>(coords.size()) != alg->dim()) {
    throw Error(ErrorKind::kUsage, "element has " + std::to_string(coords.size()) +
                                       " coordinates, algebra " +
                                       to_string(alg->descriptor()) + " has dimension " +
                                       std::to_string(alg->dim()));
  }
  return {std::move(alg), std::move(coords)};
}

// ------------------------------------------------------------ operations

void CubicJordanAlgebra::require_cubic(const char* what) const {
  if (degree_ != 3) {
    throw Error(ErrorKind::kUnsupported,
                std::string(what) + " requires a cubic algebra; " + to_string(desc_) +
                    " has degree 2");
  }
}

Rational CubicJordanAlgebra::cubic_polarization(const Vec& x, const Vec& y,
                                                const Vec& z) const {
  require_cubic("cubic_polarization");
  Rational s = 0;
  for (const auto& t : tensor_) {
    if (sgn(x[t.i]) == 0 || sgn(y[t.j]) == 0 || sgn(z[t.k]) == 0) continue;
    s += t.coef * x[t.i] * y[t.j] * z[t.k];
  }
  return s;
}

Vec CubicJordanAlgebra::polarization_form(const Vec& x, const Vec& y) const {
  require_cubic("polarization_form");
  Vec w(dim_);
  for (const auto& t : tensor_) {
    if (sgn(x[t.i]) == 0 || sgn(y[t.j]) == 0) continue;
    w[t.k] += t.coef * x[t.i] * y[t.j];
  }
  return w;
}

Rational CubicJordanAlgebra::cubic_norm(const Vec& x) const {
  return cubic_polarization(x, x, x);
}

Rational CubicJordanAlgebra::trace(const Vec& x) const {
  return 3 * cubic_polarization(identity_, identity_, x);
}

Rational CubicJordanAlgebra::quad_S(const Vec& x) const {
  return 3 * cubic_polarization(x, x, identity_);
}

Rational CubicJordanAlgebra::bilin_S(const Vec& x, const Vec& y) const {
  return 6 * cubic_polarization(x, y, identity_);
}

Rational CubicJordanAlgebra::trace_form(const Vec& x, const Vec& y) const {
  return trace(x) * trace(y) - bilin_S(x, y);
}

Vec CubicJordanAlgebra::sharp(const Vec& x) const {
  require_cubic("sharp");
  Vec w(dim_);
  for (const auto& t : tensor_) {
    if (sgn(x[t.i]) == 0 || sgn(x[t.j]) == 0) continue;
    w[t.k] += 3 * t.coef * x[t.i] * x[t.j];
  }
  return gram_inv_ * w;
}

Vec CubicJordanAlgebra::cross(const Vec& x, const Vec& y) const {
  require_cubic("cross");
  Vec w(dim_);
  for (const auto& t : tensor_) {
    if (sgn(x[t.i]) == 0 || sgn(y[t.j]) == 0) continue;
    w[t.k] += 6 * t.coef * x[t.i] * y[t.j];
  }
  return gram_inv_ * w;
}

Rational CubicJordanAlgebra::quadratic_norm(const Vec& x) const {
  if (degree_ != 2) {
    throw Error(ErrorKind::kUnsupported,
                "quadratic_norm requires a degree-2 algebra; got " + to_string(desc_));
  }
  return dot(x, quad_ * x);
}

Rational CubicJordanAlgebra::quadratic_polarization(const Vec& x, const Vec& y) const {
  if (degree_ != 2) {
    throw Error(ErrorKind::kUnsupported,
                "quadratic_polarization requires a degree-2 algebra; got " +
                    to_string(desc_));
  }
  return 2 * dot(x, quad_ * y);
}

Vec CubicJordanAlgebra::circ(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  Rational xy;
  for (int i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      xy = x[i] * y[j];
      for (const Term& t : circ_[static_cast<std::size_t>(i * dim_ + j)]) {
        out[t.index] += xy * t.coef;
      }
    }
  }
  return out;
}

Vec CubicJordanAlgebra::triple(const Vec& x, const Vec& y, const Vec& z) const {
  Vec a = circ(circ(x, y), z);
  Vec b = circ(x, circ(y, z));
  Vec c = circ(circ(x, z), y);
  return sub(add(a, b), c);
}

Vec CubicJordanAlgebra::u_op(const Vec& x, const Vec& y) const {
  Vec a = circ(x, circ(x, y));
  Vec b = circ(circ(x, x), y);
  return sub(scale(2, a), b);
}

Vec CubicJordanAlgebra::v_op(const Vec& x, const Vec& y, const Vec& z) const {
  return sub(sub(u_op(add(x, z), y), u_op(x, y)), u_op(z, y));
}

RatMatrix CubicJordanAlgebra::left_mult(const Vec& x) const {
  RatMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = circ(x, unit_vec(dim_, j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

RatMatrix CubicJordanAlgebra::u_matrix(const Vec& x) const {
  RatMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = u_op(x, unit_vec(dim_, j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

// ------------------------------------------------------------ matrices

namespace {

Vec real_entry(int q, const Rational& r) {
  Vec v(q);
  v[0] = r;
  return v;
}

Vec slot(const Vec& x, int start, int q) {
  return Vec(x.begin() + start, x.begin() + start + q);
}

Vec negate(const Vec& v) { return scale(-1, v); }

void require_matrix_kind(const JordanDescriptor& d) {
  if (d.kind != Kind::kHermitian3 && d.kind != Kind::kLorentzian12 &&
      d.kind != Kind::kHermitian2) {
    throw Error(ErrorKind::kUnsupported,
                "no matrix realization for " + to_string(d));
  }
}

}  // namespace

CAMatrix to_matrix(const JordanDescriptor& d, const Vec& x) {
  require_matrix_kind(d);
  const CompositionAlgebra& a = algebra(d.label);
  int q = a.dim();
  if (d.kind == Kind::kHermitian2) {
    CAMatrix m(2, std::vector<Vec>(2));
    Vec z = slot(x, 2, q);
    m[0][0] = real_entry(q, x[0]);
    m[1][1] = real_entry(q, x[1]);
    m[0][1] = z;
    m[1][0] = a.conjugate(z);
    return m;
  }
  Vec x1 = slot(x, 3, q), x2 = slot(x, 3 + q, q), x3 = slot(x, 3 + 2 * q, q);
  CAMatrix m(3, std::vector<Vec>(3));
  for (int i = 0; i < 3; ++i) m[i][i] = real_entry(q, x[i]);
  m[0][1] = x3;
  m[0][2] = a.conjugate(x2);
  m[1][2] = x1;
  m[2][1] = a.conjugate(x1);
  if (d.kind == Kind::kHermitian3) {
    m[1][0] = a.conjugate(x3);
    m[2][0] = x2;
  } else {
    // η = diag(−1, +1, +1): entries coupling index 1 to the others flip sign.
    m[1][0] = negate(a.conjugate(x3));
    m[2][0] = negate(x2);
  }
  return m;
}

Vec from_matrix(const JordanDescriptor& d, const CAMatrix& m) {
  require_matrix_kind(d);
  int q = ca_dim(d.label);
  int dim = jordan_dim(d);
  Vec x(dim);
  if (d.kind == Kind::kHermitian2) {
    x[0] = m[0][0][0];
    x[1] = m[1][1][0];
    for (int c = 0; c < q; ++c) x[2 + c] = m[0][1][c];
    return x;
  }
  for (int i = 0; i < 3; ++i) x[i] = m[i][i][0];
  bool lor = d.kind == Kind::kLorentzian12;
  for (int c = 0; c < q; ++c) {
    x[3 + c] = m[1][2][c];
    x[3 + q + c] = lor ? Rational(-m[2][0][c]) : m[2][0][c];
    x[3 + 2 * q + c] = m[0][1][c];
  }
  return x;
}

CAMatrix matrix_product(CALabel label, const CAMatrix& a, const CAMatrix& b) {
  const CompositionAlgebra& alg = algebra(label);
  std::size_t n = a.size();
  CAMatrix out(n, std::vector<Vec>(n, Vec(alg.dim())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out[i][j] = add(out[i][j], alg.multiply(a[i][k], b[k][j]));
  return out;
}

Vec matrix_jordan_product(const JordanDescriptor& d, const Vec& x, const Vec& y) {
  CAMatrix mx = to_matrix(d, x);
  CAMatrix my = to_matrix(d, y);
  CAMatrix p = matrix_product(d.label, mx, my);
  CAMatrix r = matrix_product(d.label, my, mx);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      p[i][j] = scale(make_rational(1, 2), add(p[i][j], r[i][j]));
  return from_matrix(d, p);
}

}  // namespace exlie
