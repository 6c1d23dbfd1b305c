#include "exlie/composition_algebra.hpp"

#include <array>
#include <mutex>

#include "exlie/error.hpp"

namespace exlie {

const std::vector<CALabel>& all_ca_labels() {
  static const std::vector<CALabel> labels = {
      CALabel::R, CALabel::C, CALabel::H, CALabel::O,
      CALabel::Cs, CALabel::Hs, CALabel::Os};
  return labels;
}

std::string to_string(CALabel label) {
  switch (label) {
    case CALabel::R: return "R";
    case CALabel::C: return "C";
    case CALabel::H: return "H";
    case CALabel::O: return "O";
    case CALabel::Cs: return "Cs";
    case CALabel::Hs: return "Hs";
    case CALabel::Os: return "Os";
  }
  return "?";
}

CALabel parse_ca_label(const std::string& text) {
  for (CALabel l : all_ca_labels()) {
    if (to_string(l) == text) return l;
  }
  throw Error(ErrorKind::kUsage,
              "unknown composition algebra '" + text +
                  "' (expected one of R, C, H, O, Cs, Hs, Os)");
}

int ca_dim(CALabel label) {
  switch (label) {
    case CALabel::R: return 1;
    case CALabel::C: case CALabel::Cs: return 2;
    case CALabel::H: case CALabel::Hs: return 4;
    case CALabel::O: case CALabel::Os: return 8;
  }
  return 0;
}

bool ca_is_split(CALabel label) {
  return label == CALabel::Cs || label == CALabel::Hs || label == CALabel::Os;
}

namespace {

struct Table {
  int q;
  std::vector<CompositionAlgebra::Product> prod;
  std::vector<int> conj;
};

// Doubling A -> A ⊕ A with (a,b)(c,d) = (ac + γ·d̄b, da + b·c̄).
// Basis of the double: e_i = (e_i, 0) and e_{q+i} = (0, e_i).
Table cayley_dickson(const Table& a, int gamma) {
  int q = a.q;
  Table t{2 * q, std::vector<CompositionAlgebra::Product>(4 * q * q),
          std::vector<int>(2 * q)};
  auto p = [&](int i, int j) { return a.prod[i * q + j]; };
  auto set = [&](int i, int j, int index, int sign) {
    t.prod[i * 2 * q + j] = {index, sign};
  };
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      // (e_i,0)(e_j,0) = (e_i e_j, 0)
      set(i, j, p(i, j).index, p(i, j).sign);
      // (e_i,0)(0,e_j) = (0, e_j e_i)
      set(i, q + j, q + p(j, i).index, p(j, i).sign);
      // (0,e_i)(e_j,0) = (0, e_i ē_j)
      set(q + i, j, q + p(i, j).index, p(i, j).sign * a.conj[j]);
      // (0,e_i)(0,e_j) = (γ ē_j e_i, 0)
      set(q + i, q + j, p(j, i).index, gamma * a.conj[j] * p(j, i).sign);
    }
  }
  for (int i = 0; i < q; ++i) {
    t.conj[i] = a.conj[i];
    t.conj[q + i] = -1;
  }
  return t;
}

}  // namespace

CompositionAlgebra build_algebra(CALabel label) {
  Table t{1, {{0, 1}}, {1}};
  int steps = 0;
  switch (ca_dim(label)) {
    case 2: steps = 1; break;
    case 4: steps = 2; break;
    case 8: steps = 3; break;
    default: steps = 0;
  }
  for (int s = 0; s < steps; ++s) {
    int gamma = (ca_is_split(label) && s == steps - 1) ? 1 : -1;
    t = cayley_dickson(t, gamma);
  }
  CompositionAlgebra alg;
  alg.label_ = label;
  alg.q_ = t.q;
  alg.table_ = std::move(t.prod);
  alg.conj_ = std::move(t.conj);
  return alg;
}

const CompositionAlgebra& algebra(CALabel label) {
  static std::once_flag once;
  static std::array<CompositionAlgebra, 7> cache;
  std::call_once(once, [] {
    for (CALabel l : all_ca_labels()) cache[static_cast<int>(l)] = build_algebra(l);
  });
  return cache[static_cast<int>(label)];
}

Vec CompositionAlgebra::mult_table_entry(int i, int j) const {
  Vec v(q_);
  const Product& p = product(i, j);
  v[p.index] = p.sign;
  return v;
}

Vec CompositionAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(q_);
  for (int i = 0; i < q_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < q_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Product& p = product(i, j);
      if (p.sign > 0) out[p.index] += a[i] * b[j];
      else out[p.index] -= a[i] * b[j];
    }
  }
  return out;
}

Vec CompositionAlgebra::conjugate(const Vec& a) const {
  Vec out(q_);
  for (int i = 0; i < q_; ++i) out[i] = conj_[i] > 0 ? a[i] : Rational(-a[i]);
  return out;
}

Rational CompositionAlgebra::norm(const Vec& a) const {
  return multiply(a, conjugate(a))[0];
}

Rational CompositionAlgebra::norm_bilinear(const Vec& a, const Vec& b) const {
  return norm(add(a, b)) - norm(a) - norm(b);
}

RatMatrix CompositionAlgebra::norm_gram() const {
  RatMatrix g(q_, q_);
  for (int i = 0; i < q_; ++i) {
    for (int j = 0; j < q_; ++j) {
      g.at(i, j) = norm_bilinear(unit_vec(q_, i), unit_vec(q_, j)) / 2;
    }
  }
  return g;
}

CAElement multiply(const CAElement& a, const CAElement& b) {
  if (a.label != b.label) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "cannot multiply elements of " + to_string(a.label) + " and " +
                    to_string(b.label));
  }
  return {a.label, algebra(a.label).multiply(a.coords, b.coords)};
}

CAElement conjugate(const CAElement& a) {
  return {a.label, algebra(a.label).conjugate(a.coords)};
}

Rational real_part(const CAElement& a) { return a.coords.at(0); }

Rational norm(const CAElement& a) { return algebra(a.label).norm(a.coords); }

}  // namespace exlie
