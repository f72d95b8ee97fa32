#pragma once

#include <random>
#include <vector>

#include "trihom/algebra.hpp"
#include "trihom/samples.hpp"
#include "trihom/solver.hpp"
#include "trihom/tensor.hpp"

namespace trihom::test {

/// Small random rationals keep the exact arithmetic cheap while still
/// exercising non-integer coefficients.
inline Scalar random_scalar(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 9) - 4;
  long den = static_cast<long>(rng() % 3) + 1;
  Rat r(num, den);
  r.canonicalize();
  return Scalar(r);
}

inline Vec random_vec(std::mt19937_64& rng, int n) {
  Vec v(n);
  for (Scalar& s : v) s = random_scalar(rng);
  return v;
}

inline Tensor random_tensor(std::mt19937_64& rng, int dim, int arity) {
  Tensor t(dim, arity);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = random_scalar(rng);
  return t;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng);
  return m;
}

inline Matrix random_skew(std::mt19937_64& rng, int n) {
  Matrix m(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      Scalar s = random_scalar(rng);
      m.at(p, q) = s;
      m.at(q, p) = -s;
    }
  return m;
}

/// Random point of an exact skew parametrization.
inline Matrix random_in_subspace(std::mt19937_64& rng, const SkewParametrization& param) {
  std::vector<Scalar> coeff(param.param_count());
  for (Scalar& s : coeff) s = random_scalar(rng);
  return param.assemble(coeff);
}

/// The multiplicative algebras used by randomized suites: the worked
/// 3-dimensional example twisted and untwisted, the simple 4-dimensional
/// algebra, and the 4-dimensional single-product algebra under its
/// worked-example twist.
inline std::vector<HomTriAlgebra> bundled_algebras() {
  std::vector<HomTriAlgebra> out;
  out.emplace_back(samples::dim3_bracket(), Matrix::identity(3));

  samples::Ex31Params p = samples::Ex31Params::defaults();
  p.a22 = Scalar(2);
  p.a33 = Scalar(Rat(1, 2));
  out.push_back(twist(samples::dim3_bracket(), samples::ex31_alpha(p)));

  out.emplace_back(samples::nambu4_bracket(), Matrix::identity(4));
  out.push_back(twist(samples::dim4_bracket(),
                      samples::ex32_alpha(samples::Ex32Params::defaults())));
  return out;
}

}  // namespace trihom::test
