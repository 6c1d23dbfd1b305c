#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "exlie/composition_algebra.hpp"
#include "exlie/error.hpp"

using namespace exlie;

namespace {

// Independent oracle: Hamilton quaternions written out by hand, and the
// doubled algebras evaluated element-wise on pairs.
Vec hamilton(const Vec& a, const Vec& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Vec qconj(const Vec& a) { return {a[0], -a[1], -a[2], -a[3]}; }

// (a,b)(c,d) = (ac + γ d̄ b, da + b c̄) on quaternion pairs.
Vec double_quaternion(const Vec& x, const Vec& y, int gamma) {
  Vec a(x.begin(), x.begin() + 4), b(x.begin() + 4, x.end());
  Vec c(y.begin(), y.begin() + 4), d(y.begin() + 4, y.end());
  Vec first = add(hamilton(a, c), scale(gamma, hamilton(qconj(d), b)));
  Vec second = add(hamilton(d, a), hamilton(b, qconj(c)));
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

Vec assoc(const CompositionAlgebra& A, const Vec& a, const Vec& b, const Vec& c) {
  return sub(A.multiply(A.multiply(a, b), c), A.multiply(a, A.multiply(b, c)));
}

}  // namespace

TEST_CASE("labels and dimensions") {
  CHECK(all_ca_labels().size() == 7);
  for (CALabel l : all_ca_labels()) {
    CHECK(parse_ca_label(to_string(l)) == l);
    CHECK(algebra(l).dim() == ca_dim(l));
  }
  CHECK_THROWS_AS(parse_ca_label("S"), Error);
  CHECK(build_algebra(CALabel::R).mult_table_entry(0, 0) == Vec{1});
}

TEST_CASE("quaternion table matches Hamilton's rules") {
  const auto& H = algebra(CALabel::H);
  CHECK(H.product(1, 2).index == 3);
  CHECK(H.product(1, 2).sign == 1);
  CHECK(H.product(2, 1).sign == -1);
  CHECK(H.multiply(unit_vec(4, 1), unit_vec(4, 1)) == scale(-1, unit_vec(4, 0)));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    Vec a = random_vec(rng, 4), b = random_vec(rng, 4);
    CHECK(H.multiply(a, b) == hamilton(a, b));
  }
}

TEST_CASE("octonion tables match pairwise doubling of quaternions") {
  std::mt19937_64 rng(2);
  for (auto [label, gamma] : {std::pair{CALabel::O, -1}, std::pair{CALabel::Os, 1}}) {
    const auto& A = algebra(label);
    for (int t = 0; t < 100; ++t) {
      Vec a = random_vec(rng, 8), b = random_vec(rng, 8);
      CHECK(A.multiply(a, b) == double_quaternion(a, b, gamma));
    }
  }
}

TEST_CASE("norm signatures") {
  CHECK(signature(algebra(CALabel::O).norm_gram()) == Signature{8, 0, 0});
  CHECK(signature(algebra(CALabel::Os).norm_gram()) == Signature{4, 4, 0});
  CHECK(signature(algebra(CALabel::Hs).norm_gram()) == Signature{2, 2, 0});
  CHECK(signature(algebra(CALabel::Cs).norm_gram()) == Signature{1, 1, 0});
  CHECK(signature(algebra(CALabel::H).norm_gram()) == Signature{4, 0, 0});
  CHECK(norm(CAElement{CALabel::C, unit_vec(2, 1)}) == 1);
  CHECK(norm(CAElement{CALabel::Cs, unit_vec(2, 1)}) == -1);
}

TEST_CASE("element-level operations") {
  CAElement e0{CALabel::O, unit_vec(8, 0)};
  CHECK(conjugate(e0).coords == e0.coords);
  CAElement e1{CALabel::O, unit_vec(8, 1)}, e2{CALabel::O, unit_vec(8, 2)};
  CHECK(real_part(multiply(e1, e2)) == 0);
  CAElement h{CALabel::H, unit_vec(4, 1)};
  CHECK_THROWS_AS(multiply(e1, h), Error);
  try {
    multiply(e1, h);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kAlgebraMismatch);
  }
  // Octonions are not associative on basis units.
  const auto& O = algebra(CALabel::O);
  CHECK_FALSE(is_zero(assoc(O, unit_vec(8, 1), unit_vec(8, 2), unit_vec(8, 4))));
}

TEST_CASE("composition, alternativity, conjugation and associativity properties") {
  std::mt19937_64 rng(3);
  for (CALabel l : all_ca_labels()) {
    const auto& A = algebra(l);
    int q = A.dim();
    bool any_nonassoc = false;
    for (int t = 0; t < 200; ++t) {
      Vec a = random_vec(rng, q), b = random_vec(rng, q), c = random_vec(rng, q);
      Vec ab = A.multiply(a, b);
      CHECK(A.norm(ab) == A.norm(a) * A.norm(b));
      CHECK(A.conjugate(ab) == A.multiply(A.conjugate(b), A.conjugate(a)));
      CHECK(A.multiply(a, A.multiply(a, b)) == A.multiply(A.multiply(a, a), b));
      CHECK(A.multiply(A.multiply(b, a), a) == A.multiply(b, A.multiply(a, a)));
      CHECK(A.multiply(unit_vec(q, 0), a) == a);
      CHECK(A.multiply(a, unit_vec(q, 0)) == a);
      // Moufang identity a(b(ac)) = (aba)c, valid in every alternative algebra.
      CHECK(A.multiply(a, A.multiply(b, A.multiply(a, c))) ==
            A.multiply(A.multiply(A.multiply(a, b), a), c));
      if (!is_zero(assoc(A, a, b, c))) any_nonassoc = true;
    }
    bool octonionic = q == 8;
    CHECK(any_nonassoc == octonionic);
  }
}
