#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exlie/error.hpp"
#include "exlie/jordan_core.hpp"

using namespace exlie;
using Kind = JordanDescriptor::Kind;

namespace {

// Oracle: the Hermitian 3×3 cubic norm evaluated directly with algebra
// operations, α1α2α3 − Σ αᵢ n(xᵢ) + 2 Re(x1 x2 x3).
Rational hermitian_norm_oracle(CALabel label, const Vec& x) {
  const auto& A = algebra(label);
  int q = A.dim();
  Vec x1(x.begin() + 3, x.begin() + 3 + q), x2(x.begin() + 3 + q, x.begin() + 3 + 2 * q),
      x3(x.begin() + 3 + 2 * q, x.end());
  return x[0] * x[1] * x[2] - x[0] * A.norm(x1) - x[1] * A.norm(x2) - x[2] * A.norm(x3) +
         2 * A.multiply(A.multiply(x1, x2), x3)[0];
}

// Oracle for J_{1,2}: ηX is Hermitian, and the norm is −N_H(ηX).
Rational lorentzian_norm_oracle(CALabel label, const Vec& x) {
  int q = ca_dim(label);
  Vec h = x;
  h[0] = -x[0];
  for (int c = 0; c < q; ++c) {
    h[3 + q + c] = -x[3 + q + c];      // (ηX)_31 = −X_31 = x2
    h[3 + 2 * q + c] = -x[3 + 2 * q + c];  // (ηX)_12 = −X_12 = −x3
  }
  // With h as Hermitian coordinates (α = (−a1,a2,a3), y1 = x1, y2 = −x2,
  // y3 = −x3) the matrix of h equals ηX.
  return -hermitian_norm_oracle(label, h);
}

std::vector<JordanDescriptor> cubic_zoo() {
  std::vector<JordanDescriptor> out = {JordanDescriptor::real_field(),
                                       JordanDescriptor::spin_factor(1, 1),
                                       JordanDescriptor::spin_factor(0, 3),
                                       JordanDescriptor::spin_factor(4, 4)};
  for (CALabel l : all_ca_labels()) out.push_back(JordanDescriptor::hermitian3(l));
  for (CALabel l : all_ca_labels()) out.push_back(JordanDescriptor::lorentzian12(l));
  return out;
}

}  // namespace

TEST_CASE("descriptor parsing and dimensions") {
  CHECK(parse_descriptor("J3(O)") == JordanDescriptor::hermitian3(CALabel::O));
  CHECK(parse_descriptor("J3Os") == JordanDescriptor::hermitian3(CALabel::Os));
  CHECK(parse_descriptor("J3^Cs") == JordanDescriptor::hermitian3(CALabel::Cs));
  CHECK(parse_descriptor("R+Gamma(9,1)") == JordanDescriptor::spin_factor(9, 1));
  CHECK(parse_descriptor("Spin(8,0)") == JordanDescriptor::spin_factor(8, 0));
  CHECK(parse_descriptor("J12(O)") == JordanDescriptor::lorentzian12(CALabel::O));
  CHECK(parse_descriptor("Gamma(5,5)") == JordanDescriptor::quadratic_spin(5, 5));
  CHECK(parse_descriptor("J2(Os)") == JordanDescriptor::hermitian2(CALabel::Os));
  CHECK_THROWS_AS(parse_descriptor("J4(O)"), Error);
  for (const auto& d : cubic_zoo()) CHECK(parse_descriptor(to_string(d)) == d);
  CHECK(jordan_dim(JordanDescriptor::real_field()) == 1);
  CHECK(jordan_dim(JordanDescriptor::hermitian3(CALabel::O)) == 27);
  CHECK(jordan_dim(JordanDescriptor::spin_factor(9, 1)) == 11);
  CHECK_THROWS_AS(jordan_dim(JordanDescriptor::spin_factor(0, 0)), Error);
  CHECK_THROWS_AS(build_jordan(JordanDescriptor::quadratic_spin(0, 3)), Error);
}

TEST_CASE("norm examples") {
  auto R = jordan(JordanDescriptor::real_field());
  CHECK(R->cubic_norm({3}) == 27);
  auto g11 = jordan(JordanDescriptor::spin_factor(1, 1));
  CHECK(g11->cubic_norm({2, 1, 1}) == 0);
  for (const auto& d : cubic_zoo()) {
    auto J = jordan(d);
    CHECK(J->cubic_norm(J->identity()) == 1);
    CHECK(J->cubic_polarization(J->identity(), J->identity(), J->identity()) == 1);
  }
  auto O = jordan(JordanDescriptor::hermitian3(CALabel::O));
  Vec diag(27);
  diag[0] = 2;
  diag[1] = 3;
  diag[2] = 5;
  CHECK(O->cubic_norm(diag) == 30);
  CHECK(O->trace(O->identity()) == 3);
  CHECK(O->trace(diag) == 10);
  Vec sharp_expected(27);
  sharp_expected[0] = 15;
  sharp_expected[1] = 10;
  sharp_expected[2] = 6;
  CHECK(O->sharp(diag) == sharp_expected);
  CHECK(O->sharp(O->identity()) == O->identity());
  CHECK(O->cross(O->identity(), O->identity()) == scale(2, O->identity()));
  CHECK(O->cross(unit_vec(27, 0), unit_vec(27, 1)) == unit_vec(27, 2));
  CHECK(is_zero(O->circ(unit_vec(27, 0), unit_vec(27, 1))));
  auto C = jordan(JordanDescriptor::hermitian3(CALabel::C));
  CHECK(rank(C->trace_gram()) == 9);
}

TEST_CASE("norm agrees with direct matrix formulas") {
  std::mt19937_64 rng(17);
  for (CALabel l : all_ca_labels()) {
    auto H = jordan(JordanDescriptor::hermitian3(l));
    auto L = jordan(JordanDescriptor::lorentzian12(l));
    for (int t = 0; t < 25; ++t) {
      Vec x = random_vec(rng, H->dim());
      CHECK(H->cubic_norm(x) == hermitian_norm_oracle(l, x));
      CHECK(L->cubic_norm(x) == lorentzian_norm_oracle(l, x));
    }
  }
}

TEST_CASE("polarization symmetry") {
  std::mt19937_64 rng(4);
  auto J = jordan(JordanDescriptor::hermitian3(CALabel::Hs));
  for (int t = 0; t < 20; ++t) {
    Vec x = random_vec(rng, 15), y = random_vec(rng, 15), z = random_vec(rng, 15);
    Rational v = J->cubic_polarization(x, y, z);
    CHECK(J->cubic_polarization(y, x, z) == v);
    CHECK(J->cubic_polarization(z, y, x) == v);
    CHECK(J->cubic_polarization(x, z, y) == v);
    CHECK(J->cubic_polarization(y, z, x) == v);
    CHECK(J->cubic_polarization(z, x, y) == v);
    // Seven-term polarization oracle.
    Rational seven = J->cubic_norm(add(add(x, y), z)) - J->cubic_norm(add(x, y)) -
                     J->cubic_norm(add(x, z)) - J->cubic_norm(add(y, z)) +
                     J->cubic_norm(x) + J->cubic_norm(y) + J->cubic_norm(z);
    CHECK(6 * v == seven);
  }
}

TEST_CASE("structure constants agree with the matrix product") {
  for (CALabel l : all_ca_labels()) {
    for (auto d : {JordanDescriptor::hermitian3(l), JordanDescriptor::lorentzian12(l),
                   JordanDescriptor::hermitian2(l)}) {
      auto J = jordan(d);
      int n = J->dim();
      bool all = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (J->circ(unit_vec(n, i), unit_vec(n, j)) !=
              matrix_jordan_product(d, unit_vec(n, i), unit_vec(n, j)))
            all = false;
      CHECK_MESSAGE(all, to_string(d));
    }
  }
}

TEST_CASE("identity suites") {
  std::vector<JordanDescriptor> all = cubic_zoo();
  all.push_back(JordanDescriptor::quadratic_spin(5, 5));
  all.push_back(JordanDescriptor::quadratic_spin(1, 9));
  all.push_back(JordanDescriptor::hermitian2(CALabel::O));
  for (const auto& d : all) {
    auto J = jordan(d);
    int trials = J->dim() >= 27 ? 8 : 20;
    for (const auto& c : jordan_identity_suite(*J, trials, 1234)) {
      CHECK_MESSAGE(c.failed == 0, to_string(d) << " " << c.name);
      CHECK(c.passed == trials);
    }
  }
}

TEST_CASE("operator examples") {
  std::mt19937_64 rng(9);
  auto J = jordan(JordanDescriptor::hermitian3(CALabel::H));
  const Vec& c = J->identity();
  Vec x = random_vec(rng, 15), y = random_vec(rng, 15);
  CHECK(J->triple(c, c, x) == x);
  CHECK(J->triple(x, c, x) == J->circ(x, x));
  CHECK(J->u_matrix(c) == RatMatrix::identity(15));
  // U_{U_X Y} = U_X U_Y U_X as operators.
  CHECK(J->u_matrix(J->u_op(x, y)) == J->u_matrix(x) * J->u_matrix(y) * J->u_matrix(x));
  CHECK(J->left_mult(c) == RatMatrix::identity(15));
}

TEST_CASE("quadratic kinds") {
  auto G = jordan(JordanDescriptor::quadratic_spin(1, 9));
  auto J2 = jordan(JordanDescriptor::hermitian2(CALabel::O));
  CHECK(G->dim() == 10);
  CHECK(J2->dim() == 10);
  RatMatrix gg(10, 10), gj(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      gg.at(i, j) = G->quadratic_polarization(unit_vec(10, i), unit_vec(10, j));
      gj.at(i, j) = J2->quadratic_polarization(unit_vec(10, i), unit_vec(10, j));
    }
  CHECK(signature(gg) == Signature{1, 9, 0});
  CHECK(signature(gj) == Signature{1, 9, 0});
  CHECK_THROWS_AS(G->sharp(G->identity()), Error);
}

TEST_CASE("element wrapper") {
  auto J = jordan(JordanDescriptor::hermitian3(CALabel::R));
  CHECK_THROWS_AS(make_element(J, Vec(5)), Error);
  CHECK(make_element(J, Vec(6)).coords.size() == 6);
}
