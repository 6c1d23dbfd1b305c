#include <random>

#include "exlie/jordan_core.hpp"

namespace exlie {

std::vector<IdentityCount> jordan_identity_suite(const CubicJordanAlgebra& alg, int trials,
                                                 std::uint64_t seed) {
  using Kind = JordanDescriptor::Kind;
  std::mt19937_64 rng(seed);
  const int d = alg.dim();
  const Kind kind = alg.descriptor().kind;
  const bool matrix_kind =
      kind == Kind::kHermitian3 || kind == Kind::kLorentzian12 || kind == Kind::kHermitian2;

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

  const Vec& c = alg.identity();
  for (int t = 0; t < trials; ++t) {
    Vec x = random_vec(rng, d), y = random_vec(rng, d), z = random_vec(rng, d);
    Rational lambda = random_rational(rng);
    Vec xy = alg.circ(x, y);
    Vec xx = alg.circ(x, x);
    check("commutativity", xy == alg.circ(y, x));
    check("unit", alg.circ(c, x) == x);
    check("jordan_identity", alg.circ(xx, alg.circ(x, y)) == alg.circ(x, alg.circ(xx, y)));
    check("triple_outer_symmetry", alg.triple(x, y, z) == alg.triple(z, y, x));
    check("qja_unit", alg.u_op(c, y) == y);
    check("qja_commutation",
          alg.u_op(x, alg.v_op(y, x, z)) == alg.v_op(x, y, alg.u_op(x, z)));
    Vec uxy = alg.u_op(x, y);
    check("qja_fundamental",
          alg.u_op(uxy, z) == alg.u_op(x, alg.u_op(y, alg.u_op(x, z))));
    check("v_diagonal", alg.v_op(x, y, x) == scale(2, uxy));
    if (alg.is_cubic()) {
      Rational nx = alg.cubic_norm(x);
      check("norm_homogeneity",
            alg.cubic_norm(scale(lambda, x)) == lambda * lambda * lambda * nx);
      check("adjoint_identity", alg.sharp(alg.sharp(x)) == scale(nx, x));
      check("cross_diagonal", alg.cross(x, x) == scale(2, alg.sharp(x)));
      check("trace_form_associativity",
            alg.trace_form(xy, z) == alg.trace_form(x, alg.circ(y, z)));
      check("polarization_diagonal", alg.cubic_polarization(x, x, x) == nx);
    } else {
      check("quadratic_norm_homogeneity",
            alg.quadratic_norm(scale(lambda, x)) == lambda * lambda * alg.quadratic_norm(x));
    }
    if (matrix_kind) {
      check("matrix_product_agreement", xy == matrix_jordan_product(alg.descriptor(), x, y));
    }
  }
  return out;
}

}  // namespace exlie
