#pragma once

#include <optional>

#include "trihom/coalgebra.hpp"
#include "trihom/report.hpp"
#include "trihom/representation.hpp"
#include "trihom/ybe.hpp"

namespace trihom {

/// The three cobracket components induced by an r-matrix. With
/// r = sum_i x_i x y_i:
///   d1(x) = sum_{i,j} [x, x_i, x_j] x a(y_j) x a(y_i)
///   d2(x) = sum_{i,j} a(y_i) x [x, x_i, x_j] x a(y_j)
///   d3(x) = sum_{i,j} a(y_j) x a(y_i) x [x, x_i, x_j]
/// This leg order is the unique one making the total d1 + d2 + d3
/// skew-symmetric under both adjacent slot switches.
struct DeltaComponents {
  CoBracket d1, d2, d3;
  CoBracket total() const { return d1 + d2 + d3; }
};

/// Builds the components and validates the skew-symmetry of their sum;
/// throws Error carrying the residual when the validation fails.
DeltaComponents build_delta_components(const HomTriAlgebra& alg, const Matrix& r);

/// As above but reporting the skew validation residual instead of
/// throwing (used by the assembly pipeline so failures stay inspectable).
DeltaComponents build_delta_components_unchecked(const HomTriAlgebra& alg, const Matrix& r,
                                                 Rat* skew_residual_out);

/// One cocycle check per component: component s against the local
/// representation with the adjoint action in slot s.
Report verify_local_cocycle(const HomTriAlgebra& alg, const DeltaComponents& delta);

/// A bracket/cobracket pair with the full verification trail. `overall`
/// on the report tells whether every axiom holds exactly.
struct LocalCocycleBialgebra {
  HomTriAlgebra alg;
  HomTriCoalgebra co;
  DeltaComponents components;
  std::optional<Matrix> r;
  Report report;
};

/// Full assembly pipeline from an algebra and an r-matrix: algebra
/// axioms, r-matrix skew-symmetry and invariance, the Yang-Baxter
/// bracket, the induced cobracket with its coalgebra axioms, the local
/// cocycle conditions, and the five-tensor compatibility condition. All
/// checks run regardless of earlier failures; nothing is assumed.
LocalCocycleBialgebra assemble_coboundary(const HomTriAlgebra& alg, const Matrix& r);

}  // namespace trihom
