#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "trihom/ybe.hpp"

namespace trihom {

/// Exact basis of a linear space of skew r-matrices; points of the
/// parameter space map to r = sum_s t_s B_s.
struct SkewParametrization {
  int dim = 0;
  std::vector<Matrix> basis;

  int param_count() const { return static_cast<int>(basis.size()); }
  Matrix assemble(std::span<const Scalar> params) const;
};

/// Basis E_pq = e_p x e_q - e_q x e_p, p < q, of all skew r-matrices.
SkewParametrization skew_parametrization(int dim);

/// Exact basis of the alpha-invariant skew subspace
/// {skew r : alpha r alpha^T = r}, via the nullspace of the invariance
/// operator restricted to skew coordinates.
SkewParametrization invariant_skew_subspace(const Matrix& alpha);

/// Multivariate polynomial with exact coefficients, keyed by exponent
/// vectors.
class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const Scalar& coeff);
  Scalar eval(std::span<const Scalar> point) const;
  double eval_double(std::span<const double> point) const;

 private:
  int nvars_;
  std::map<std::vector<int>, Scalar> terms_;
};

/// The Yang-Baxter bracket of r(t) = sum_s t_s B_s, entrywise, as exact
/// cubic polynomials in t. Entries that are identically zero are omitted.
struct ResidualPolynomialSystem {
  int nvars = 0;
  int dim = 0;
  std::vector<std::pair<std::size_t, Poly>> polys;  // flat arity-4 index -> polynomial

  /// Exact residual: max magnitude over entries at an exact point.
  Rat eval_max_abs(std::span<const Scalar> point) const;
  /// Euclidean norm of the system at a float point.
  double residual_norm(std::span<const double> point) const;
  /// Gradient of the sum of squares of the entries.
  std::vector<double> sos_gradient(std::span<const double> point) const;
  double sos(std::span<const double> point) const;
};

/// Extracts the polynomial system and cross-validates it against the
/// direct bracket computation at three pseudorandom rational points.
ResidualPolynomialSystem residual_polynomials(const HomTriAlgebra& alg,
                                              const SkewParametrization& param);

struct SolverConfig {
  int restarts = 32;
  double tol = 1e-10;
  int max_iters = 400;
  unsigned long max_denominator = 1000;
  std::uint64_t seed = 0;
  double box = 2.0;
};

/// Gradient descent with adaptive steps on the sum of squares, from
/// uniform random starts in [-box, box]^d. Returns the distinct points
/// whose residual norm falls below tol, sorted lexicographically.
std::vector<std::vector<double>> minimize_residual(const ResidualPolynomialSystem& sys,
                                                   const SolverConfig& config);

/// Best rational approximation with denominator <= max_denominator
/// (continued fraction convergents).
Rat rationalize(double x, unsigned long max_denominator);

struct RationalizeResult {
  std::vector<Scalar> params;
  Matrix r;
  Rat residual;
  bool verified = false;
};

/// Rationalize a float point coordinate-wise and check the Yang-Baxter
/// bracket of the assembled r-matrix exactly; verified only on an exact
/// zero.
RationalizeResult rationalize_and_verify(const HomTriAlgebra& alg,
                                         const SkewParametrization& param,
                                         std::span<const double> point,
                                         unsigned long max_denominator);

}  // namespace trihom
