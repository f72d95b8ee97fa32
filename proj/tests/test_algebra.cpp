#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "trihom/algebra.hpp"
#include "trihom/samples.hpp"

using namespace trihom;

namespace {

HomTriAlgebra dim3_with_identity() {
  return HomTriAlgebra(samples::dim3_bracket(), Matrix::identity(3));
}

Matrix diag3(const Scalar& a, const Scalar& b, const Scalar& c) {
  Matrix m(3, 3);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  return m;
}

// Independent transcription of the twisted fundamental identity, written
// directly from nested bracket evaluations over the four permuted
// argument tuples. Oracle for hom_jacobi_residual.
Rat jacobi_oracle(const HomTriAlgebra& alg) {
  int n = alg.dim();
  Rat res(0);
  std::vector<Vec> e(n);
  for (int i = 0; i < n; ++i) e[i] = basis_vec(n, i);
  auto term = [&](int a, int b, int c, int d, int f) {
    return alg.bracket_eval(alg.alpha_apply(e[a]), alg.alpha_apply(e[b]),
                            alg.bracket_eval(e[c], e[d], e[f]));
  };
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3)
        for (int x4 = 0; x4 < n; ++x4)
          for (int x5 = 0; x5 < n; ++x5) {
            Vec acc = term(x1, x2, x3, x4, x5);
            acc = vec_sub(acc, term(x3, x4, x1, x2, x5));
            acc = vec_sub(acc, term(x4, x5, x1, x2, x3));
            acc = vec_sub(acc, term(x5, x3, x1, x2, x4));
            Rat m = vec_max_abs(acc);
            if (m > res) res = m;
          }
  return res;
}

}  // namespace

TEST_CASE("generator construction enforces antisymmetry") {
  TriBracket b = samples::dim3_bracket();
  CHECK(skew_residual(b) == Rat(0));
  CHECK(b.bracket_basis(0, 1, 2) == basis_vec(3, 0));
  CHECK(b.bracket_basis(1, 0, 2) == vec_scale(Scalar(-1), basis_vec(3, 0)));
  CHECK(b.bracket_basis(1, 2, 0) == basis_vec(3, 0));
  CHECK(vec_is_zero(b.bracket_basis(0, 0, 2)));

  BracketGenerator bad{2, 1, 3, basis_vec(3, 0)};
  CHECK_THROWS_AS(TriBracket::from_generators(3, std::span<const BracketGenerator>(&bad, 1)),
                  Error);
  std::vector<BracketGenerator> dup = {{1, 2, 3, basis_vec(3, 0)},
                                       {1, 2, 3, basis_vec(3, 1)}};
  CHECK_THROWS_AS(TriBracket::from_generators(3, dup), Error);
}

TEST_CASE("bracket evaluation on the worked example") {
  HomTriAlgebra alg = dim3_with_identity();
  Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
  CHECK(alg.bracket_eval(e1, e2, e3) == e1);
  CHECK(alg.bracket_eval(e2, e1, e3) == vec_scale(Scalar(-1), e1));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    Vec x = test::random_vec(rng, 3), y = test::random_vec(rng, 3);
    CHECK(vec_is_zero(alg.bracket_eval(x, x, y)));
    CHECK(vec_is_zero(alg.bracket_eval(x, y, y)));
    CHECK(vec_is_zero(alg.bracket_eval(x, y, x)));
  }
}

TEST_CASE("bracket evaluation is trilinear") {
  std::mt19937_64 rng(5);
  HomTriAlgebra alg(samples::nambu4_bracket(), Matrix::identity(4));
  Vec x = test::random_vec(rng, 4), y = test::random_vec(rng, 4), z = test::random_vec(rng, 4),
      w = test::random_vec(rng, 4);
  Scalar c = Scalar(Rat(5, 3));
  CHECK(alg.bracket_eval(vec_add(x, vec_scale(c, w)), y, z) ==
        vec_add(alg.bracket_eval(x, y, z), vec_scale(c, alg.bracket_eval(w, y, z))));
}

TEST_CASE("skew residual flags a broken table") {
  // c_{123}^1 = 1 and c_{213}^1 = 1: the pair sums to 2.
  std::vector<Scalar> c(81);
  c[((0 * 3 + 1) * 3 + 2) * 3 + 0] = Scalar(1);
  c[((1 * 3 + 0) * 3 + 2) * 3 + 0] = Scalar(1);
  TriBracket broken = TriBracket::from_dense(3, std::move(c));
  CHECK(skew_residual(broken) == Rat(2));
  CHECK(skew_residual(TriBracket::zero(3)) == Rat(0));
}

TEST_CASE("hom-jacobi residual vanishes on the bundled algebras") {
  CHECK(hom_jacobi_residual(HomTriAlgebra(TriBracket::zero(3), Matrix::zero(3, 3))) == Rat(0));
  CHECK(hom_jacobi_residual(dim3_with_identity()) == Rat(0));
  CHECK(hom_jacobi_residual(HomTriAlgebra(samples::nambu4_bracket(), Matrix::identity(4))) ==
        Rat(0));
  for (const HomTriAlgebra& alg : test::bundled_algebras())
    CHECK(hom_jacobi_residual(alg) == Rat(0));
}

TEST_CASE("hom-jacobi residual agrees with the brute-force transcription") {
  std::mt19937_64 rng(7);
  for (const HomTriAlgebra& alg : test::bundled_algebras())
    CHECK(hom_jacobi_residual(alg) == jacobi_oracle(alg));
  // Also on an algebra that fails the identity.
  std::vector<BracketGenerator> gens = {{1, 2, 3, basis_vec(4, 0)},
                                        {1, 2, 4, basis_vec(4, 3)}};
  HomTriAlgebra bad(TriBracket::from_generators(4, gens), Matrix::identity(4));
  Rat oracle = jacobi_oracle(bad);
  CHECK(oracle > Rat(0));
  CHECK(hom_jacobi_residual(bad) == oracle);
}

TEST_CASE("multiplicativity residual") {
  TriBracket b = samples::dim3_bracket();
  CHECK(multiplicative_residual(dim3_with_identity()) == Rat(0));
  CHECK(multiplicative_residual(
            HomTriAlgebra(b, diag3(Scalar(1), Scalar(2), Scalar(Rat(1, 2))))) == Rat(0));
  CHECK(multiplicative_residual(HomTriAlgebra(b, diag3(Scalar(1), Scalar(2), Scalar(1)))) ==
        Rat(1));
}

TEST_CASE("derivation residual") {
  HomTriAlgebra alg = dim3_with_identity();
  CHECK(derivation_residual(alg, Matrix::zero(3, 3), 0) == Rat(0));

  // The twist map itself is a morphism, generally not a derivation.
  Matrix d = diag3(Scalar(1), Scalar(2), Scalar(Rat(1, 2)));
  HomTriAlgebra twisted = twist(samples::dim3_bracket(), d);
  Rat morphism_as_derivation = derivation_residual(twisted, d, 0);
  CHECK(morphism_as_derivation > Rat(0));

  // Negative powers need an invertible twist.
  HomTriAlgebra singular(samples::dim3_bracket(), diag3(Scalar(1), Scalar(1), Scalar(0)));
  CHECK_THROWS_AS(derivation_residual(singular, Matrix::zero(3, 3), -1), Error);
  CHECK(derivation_residual(alg, Matrix::zero(3, 3), -2) == Rat(0));
}

TEST_CASE("inner derivations") {
  HomTriAlgebra alg = dim3_with_identity();
  Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);

  CHECK(inner_derivation(alg, e2, e2, 0).is_zero());

  // z -> [e2, e3, z] sends e1 to e1 and kills e2, e3.
  Matrix d = inner_derivation(alg, e2, e3, 0);
  CHECK(d.col(0) == e1);
  CHECK(vec_is_zero(d.col(1)));
  CHECK(vec_is_zero(d.col(2)));

  // Inner derivations at power k are alpha^{k+1}-derivations.
  for (const HomTriAlgebra& bundled : test::bundled_algebras()) {
    int n = bundled.dim();
    for (int k = 0; k <= 2; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Vec x = basis_vec(n, i), y = basis_vec(n, j);
          if (!vec_is_zero(vec_sub(bundled.alpha_apply(x), x))) continue;
          if (!vec_is_zero(vec_sub(bundled.alpha_apply(y), y))) continue;
          CHECK(derivation_residual(bundled, inner_derivation(bundled, x, y, k), k + 1) ==
                Rat(0));
        }
  }

  // Non-fixed arguments are rejected.
  HomTriAlgebra twisted = twist(samples::dim3_bracket(),
                                diag3(Scalar(1), Scalar(2), Scalar(Rat(1, 2))));
  CHECK_THROWS_AS(inner_derivation(twisted, e2, e3, 0), Error);
}

TEST_CASE("adjoint action matrices") {
  HomTriAlgebra alg = dim3_with_identity();
  Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
  CHECK(ad1(alg, e2, e2).is_zero());

  Matrix m = ad1(alg, e2, e3);
  CHECK(m.col(0) == e1);
  CHECK(vec_is_zero(m.col(1)));
  CHECK(vec_is_zero(m.col(2)));

  // With alpha = diag(1, 2, 1/2): [alpha e1, alpha e2, e3] = [e1, 2e2, e3] = 2e1.
  HomTriAlgebra half(samples::dim3_bracket(), diag3(Scalar(1), Scalar(2), Scalar(Rat(1, 2))));
  Matrix m2 = ad1(half, e1, e2);
  CHECK(m2.col(2) == vec_scale(Scalar(2), e1));
  CHECK(vec_is_zero(m2.col(0)));
  CHECK(vec_is_zero(m2.col(1)));

  std::mt19937_64 rng(9);
  Vec x = test::random_vec(rng, 3), y = test::random_vec(rng, 3);
  CHECK(ad1(alg, x, y) + ad1(alg, y, x) == Matrix::zero(3, 3));
}

TEST_CASE("twist functor") {
  TriBracket b = samples::dim3_bracket();
  HomTriAlgebra id_twist = twist(b, Matrix::identity(3));
  CHECK(id_twist.bracket().bracket_basis(0, 1, 2) == basis_vec(3, 0));

  Matrix phi = diag3(Scalar(1), Scalar(2), Scalar(Rat(1, 2)));
  HomTriAlgebra twisted = twist(b, phi);
  CHECK(twisted.bracket().bracket_basis(0, 1, 2) == basis_vec(3, 0));
  CHECK(hom_jacobi_residual(twisted) == Rat(0));
  CHECK(multiplicative_residual(twisted) == Rat(0));

  HomTriAlgebra zero_twist = twist(b, Matrix::zero(3, 3));
  CHECK(zero_twist.bracket().is_zero());
  CHECK(hom_jacobi_residual(zero_twist) == Rat(0));

  CHECK_THROWS_AS(twist(b, diag3(Scalar(1), Scalar(2), Scalar(1))), Error);
}

TEST_CASE("twists of morphism families keep the identity") {
  // Morphisms of the 3-dimensional example with det of the lower block 1.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    samples::Ex31Params p = samples::Ex31Params::defaults();
    p.a11 = test::random_scalar(rng);
    p.a22 = test::random_scalar(rng);
    while (p.a22.is_zero()) p.a22 = test::random_scalar(rng);
    p.a23 = test::random_scalar(rng);
    p.a32 = test::random_scalar(rng);
    p.a33 = (Scalar(1) + p.a23 * p.a32) / p.a22;
    p.a12 = test::random_scalar(rng);
    p.a13 = test::random_scalar(rng);
    Matrix phi = samples::ex31_alpha(p);
    REQUIRE(morphism_residual(samples::dim3_bracket(), phi) == Rat(0));
    HomTriAlgebra twisted = twist(samples::dim3_bracket(), phi);
    CHECK(hom_jacobi_residual(twisted) == Rat(0));
  }
}
