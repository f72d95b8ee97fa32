#pragma once

#include <array>
#include <span>
#include <vector>

#include "trihom/algebra.hpp"

namespace trihom {

/// Skew bilinear map rho : L x L -> gl(V) together with a structure map
/// A on V. Values are stored on strictly increasing basis pairs and
/// extended by antisymmetry, so rho(x, x) = 0 holds by construction.
class Representation {
 public:
  /// upper holds rho(e_i, e_j) for 0-based pairs i < j in lexicographic
  /// order: (0,1), (0,2), ..., (n-2,n-1).
  Representation(int alg_dim, Matrix a, std::vector<Matrix> upper);

  /// Full-table constructor: pairs[i*n+j] = rho(e_i, e_j). Rejects tables
  /// with rho(i,i) != 0 or rho(j,i) != -rho(i,j).
  static Representation from_full(int alg_dim, Matrix a, const std::vector<Matrix>& pairs);

  int alg_dim() const { return n_; }
  int v_dim() const { return m_; }
  const Matrix& structure_map() const { return a_; }

  /// rho(e_i, e_j), any index order (0-based).
  Matrix rho_basis(int i, int j) const;

  /// Bilinear extension.
  Matrix rho(const Vec& x, const Vec& y) const;

 private:
  int pair_index(int i, int j) const { return (2 * n_ - i - 1) * i / 2 + (j - i - 1); }
  int n_;
  int m_;
  Matrix a_;
  std::vector<Matrix> upper_;
};

/// Adjoint representation of a multiplicative algebra: V = L, A = alpha,
/// rho(x, y) = ad1(x, y).
Representation adjoint_rep(const HomTriAlgebra& alg);

/// Representation on V = L x L x L with A = alpha^{x3} and rho(x, y)
/// acting as ad1(x, y) in the given slot (1..3) and alpha elsewhere.
Representation local_rep(const HomTriAlgebra& alg, int slot);

/// The three defining residuals of a representation, each maximised over
/// exhaustive basis tuples:
///   (i)   rho(a x, a b) A - A rho(a, b)
///   (ii)  rho(ab,ac)rho(a,d) + rho(ac,aa)rho(b,d) - rho([a,b,c],ad)A
///         + rho(aa,ab)rho(c,d)
///   (iii) rho(ac,ad)rho(a,b) - rho(aa,ab)rho(c,d) + rho([a,b,c],ad)A
///         + rho(ac,[a,b,d])A
std::array<Rat, 3> rep_residuals(const HomTriAlgebra& alg, const Representation& rep);

/// Multilinear map L^{x p} -> V stored densely: one V-coefficient row per
/// basis p-tuple.
class Cochain {
 public:
  Cochain(int p, int alg_dim, int v_dim);

  /// p = 1 cochain from the matrix of a linear map L -> V.
  static Cochain from_matrix(const Matrix& f);

  int arity() const { return p_; }
  int alg_dim() const { return n_; }
  int v_dim() const { return m_; }

  Scalar& coeff(std::size_t tuple_flat, int v) { return f_[tuple_flat * m_ + v]; }
  const Scalar& coeff(std::size_t tuple_flat, int v) const { return f_[tuple_flat * m_ + v]; }

  std::size_t tuple_count() const;
  std::size_t encode(std::span<const int> idx) const;

  Vec eval_basis(std::span<const int> idx) const;
  /// Multilinear extension to arbitrary vector arguments.
  Vec eval(std::span<const Vec> args) const;

  /// Matrix of a 1-cochain (v_dim x alg_dim).
  Matrix to_matrix() const;

  friend Cochain operator-(const Cochain& a, const Cochain& b);
  Rat max_abs() const;

 private:
  int p_, n_, m_;
  std::vector<Scalar> f_;
};

/// Membership defect for the twisted cochain space: max over basis tuples
/// of A f(tuple) - f(alpha tuple).
Rat is_cochain_residual(const Cochain& f, const Representation& rep, const Matrix& alpha);

/// Coboundary operator raising the arity by two. For odd arity 2N-1 the
/// value on (x_1, ..., x_{2N+1}) is
///   rho(a^{N-1} x_{2N}, a^{N-1} x_{2N+1}) f(x_1..x_{2N-1})
///   - rho(a^{N-1} x_{2N-1}, a^{N-1} x_{2N+1}) f(x_1..x_{2N-2}, x_{2N})
///   + sum_k (-1)^{N+k} rho(a^{N-1} x_{2k-1}, a^{N-1} x_{2k}) f(.. k-pair removed ..)
///   + sum_k sum_{j>2k} (-1)^{N+k+1} f(a x_1, .., [x_{2k-1}, x_{2k}, x_j], .., a x_{2n+1});
/// for even arity 2N the same shape with a distinguished first argument y,
/// alpha^N inside rho, and alpha(y) in the double sum. In the double sum
/// every surviving argument is twisted by alpha except the inserted
/// bracket, which stays bare.
Cochain coboundary(const HomTriAlgebra& alg, const Representation& rep, const Cochain& f);

/// Defect of the 1-cocycle identity
///   f([x,y,z]) = rho(x,y) f(z) + rho(y,z) f(x) + rho(z,x) f(y)
/// for a linear map f given as a v_dim x alg_dim matrix.
Rat one_cocycle_residual(const Matrix& f, const Representation& rep, const HomTriAlgebra& alg);

/// Diagnostic: max-abs of the twice-iterated coboundary of f. Reported
/// for inspection; not an identity this library asserts.
Rat coboundary_square_residual(const HomTriAlgebra& alg, const Representation& rep, const Cochain& f);

}  // namespace trihom
