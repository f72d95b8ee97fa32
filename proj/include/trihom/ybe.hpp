#pragma once

#include <array>

#include "trihom/algebra.hpp"
#include "trihom/tensor.hpp"

namespace trihom {

/// An r-matrix r = sum_{a,b} R[a][b] e_a x e_b embedded into a tensor
/// power: the first leg at slot p, the second at slot q (1-based).
struct EmbeddedFactor {
  Matrix r;
  int p = 0;
  int q = 0;
  int slots = 4;
};

inline EmbeddedFactor embed(const Matrix& r, int p, int q, int slots = 4) {
  return {r, p, q, slots};
}

/// Max defect of r + r^T (skew-symmetry of the r-matrix).
Rat skew_residual(const Matrix& r);

/// Max defect of alpha r alpha^T - r, the matrix form of
/// alpha^{x2}(r) = r.
Rat alpha_invariance_residual(const Matrix& r, const Matrix& alpha);

/// Bracket of three embedded factors, resolved by the occupancy rule:
/// exactly one slot must receive one leg from every factor (that slot
/// gets the bracket of the three legs in factor order) and every other
/// slot exactly one leg (twisted by alpha). Any other occupancy pattern
/// is rejected. This is what expressions like [r_12, r_13, r_14] mean
/// throughout this library.
Tensor embedded_triple_bracket(const EmbeddedFactor& f1, const EmbeddedFactor& f2,
                               const EmbeddedFactor& f3, const HomTriAlgebra& alg);

/// Trilinear core of the Yang-Baxter bracket: the four-term sum with
/// independent factors r1, r2, r3, written out leg by leg:
///   sum [x_i, x_j, x_k] x a(y_i) x a(y_j) x a(y_k)
///     + a(x_i) x [y_i, x_j, x_k] x a(y_j) x a(y_k)
///     + a(x_i) x a(x_j) x [y_i, y_j, x_k] x a(y_k)
///     + a(x_i) x a(x_j) x a(x_k) x [y_i, y_j, y_k]
/// with (x_i, y_i) from r1, (x_j, y_j) from r2, (x_k, y_k) from r3.
Tensor chybe_trilinear(const Matrix& r1, const Matrix& r2, const Matrix& r3,
                       const HomTriAlgebra& alg);

/// Direct expansion route of the Yang-Baxter bracket (the sum above with
/// r1 = r2 = r3 = r).
Tensor chybe_bracket_expanded(const Matrix& r, const HomTriAlgebra& alg);

/// The twisted ternary Yang-Baxter bracket
///   [[r,r,r]] = [r12,r13,r14] + [r12,r23,r24] + [r13,r23,r34] + [r14,r24,r34]
/// computed via embedded factors and cross-checked against the direct
/// expansion; the CHYBE asks this to vanish.
Tensor chybe_bracket(const Matrix& r, const HomTriAlgebra& alg);

/// The three signed variant brackets entering the compatibility
/// condition:
///   v1 =  [r12,r13,r14] + [r12,r23,r24] - [r13,r32,r34] + [r14,r42,r43]
///   v2 =  [r12,r31,r14] - [r21,r32,r24] - [r31,r32,r34] - [r41,r42,r34]
///   v3 = -[r12,r13,r41] + [r21,r23,r42] - [r31,r32,r43] - [r41,r42,r43]
/// For skew r these reduce to ([[r,r,r]], -[[r,r,r]], [[r,r,r]]).
std::array<Tensor, 3> variant_brackets(const Matrix& r, const HomTriAlgebra& alg);

/// Defect tensor, at one basis vector x, of the eight-sum five-tensor
/// compatibility condition whose vanishing is equivalent to the
/// Hom-co-Jacobi identity of the cobracket induced by r. Terms insert
/// alpha(y_i) into a variant bracket and hit one slot with the adjoint
/// action of (x_i, x) or (x, x_i) as written in the condition.
Tensor compat_defect(const Matrix& r, const HomTriAlgebra& alg, int basis_index,
                     const std::array<Tensor, 3>& variants);

/// Max magnitude of the compatibility defect over all basis vectors.
Rat compat_residual(const Matrix& r, const HomTriAlgebra& alg);

/// Twist orbit of an r-matrix: alpha^n r (alpha^n)^T, n >= 0.
Matrix twisted_r(const Matrix& r, const Matrix& alpha, int n);

}  // namespace trihom
