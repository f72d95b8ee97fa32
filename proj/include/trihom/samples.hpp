#pragma once

#include <array>

#include "trihom/algebra.hpp"

namespace trihom::samples {

/// Dimension 3, only nonzero product [e1, e2, e3] = e1.
TriBracket dim3_bracket();

/// Dimension 4, only nonzero product [e1, e2, e3] = e1.
TriBracket dim4_bracket();

/// Dimension 4, totally antisymmetric product [e_i, e_j, e_k] =
/// sum_l eps_{ijkl} e_l (the simple four-dimensional case).
TriBracket nambu4_bracket();

TriBracket abelian_bracket(int dim);

/// Parameter family of the 3-dimensional worked example: a morphism
///   a(e1) = a11 e1, a(e2) = a12 e1 + a22 e2 + a32 e3,
///   a(e3) = a13 e1 + a23 e2 + a33 e3
/// and a skew r-matrix with the three upper coefficients r12, r13, r23,
/// subject to the three constraints returned by constraint_residuals.
struct Ex31Params {
  Scalar a11, a12, a13, a22, a23, a32, a33;
  Scalar r12, r13, r23;

  static Ex31Params defaults();  // identity morphism, r = e2 x e3 - e3 x e2
};

Matrix ex31_alpha(const Ex31Params& p);
Matrix ex31_r(const Ex31Params& p);
/// LHS - RHS of the example's three displayed parameter constraints.
std::array<Scalar, 3> ex31_constraint_residuals(const Ex31Params& p);

/// Parameter family of the 4-dimensional worked example: a morphism
///   a(e1) = a11 e1, a(e2) = a12 e1 + a22 e2 + e3 + e4,
///   a(e3) = a13 e1 + a23 e2 + 2 e3 + 2 e4, a(e4) = 0
/// with a fixed skew r-matrix (all upper entries 1 except r34 = 0).
struct Ex32Params {
  Scalar a11, a12, a13, a22, a23;

  static Ex32Params defaults();
};

Matrix ex32_alpha(const Ex32Params& p);
Matrix ex32_r();
std::array<Scalar, 3> ex32_constraint_residuals(const Ex32Params& p);

}  // namespace trihom::samples
