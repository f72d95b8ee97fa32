#pragma once

#include <span>
#include <vector>

#include "trihom/matrix.hpp"
#include "trihom/tensor.hpp"

namespace trihom {

/// Sparse constructor input: the bracket of e_i, e_j, e_k for one strictly
/// increasing index triple (1-based).
struct BracketGenerator {
  int i, j, k;
  Vec value;
};

/// Trilinear bracket on an n-dimensional space, stored as the full table
/// of structure constants c_{ijk}^l. Construction from generators fills
/// all index orders by total antisymmetry, so skew-symmetry holds by
/// construction; from_dense accepts arbitrary tables (used for residual
/// demonstrations and for twisted brackets).
class TriBracket {
 public:
  static TriBracket zero(int dim);
  static TriBracket from_generators(int dim, std::span<const BracketGenerator> gens);
  static TriBracket from_dense(int dim, std::vector<Scalar> c);

  int dim() const { return dim_; }

  /// c_{ijk}^l, all indices 0-based.
  const Scalar& c(int i, int j, int k, int l) const {
    return c_[((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }

  /// [e_i, e_j, e_k] as a coordinate vector (0-based indices).
  Vec bracket_basis(int i, int j, int k) const;

  /// Trilinear extension to arbitrary vectors.
  Vec eval(const Vec& x, const Vec& y, const Vec& z) const;

  bool is_zero() const;

 private:
  TriBracket(int dim, std::vector<Scalar> c) : dim_(dim), c_(std::move(c)) {}
  int dim_ = 0;
  std::vector<Scalar> c_;
};

/// A bracket together with a twist endomorphism alpha. Construction only
/// validates shapes; the defining identities are checked by the residual
/// functions below, so that failing inputs can be built and reported.
class HomTriAlgebra {
 public:
  HomTriAlgebra(TriBracket bracket, Matrix alpha);

  int dim() const { return bracket_.dim(); }
  const TriBracket& bracket() const { return bracket_; }
  const Matrix& alpha() const { return alpha_; }

  Vec bracket_eval(const Vec& x, const Vec& y, const Vec& z) const {
    return bracket_.eval(x, y, z);
  }
  Vec alpha_apply(const Vec& x) const { return alpha_.apply(x); }

 private:
  TriBracket bracket_;
  Matrix alpha_;
};

/// Max defect of c_{ijk}^l + c_{jik}^l and c_{ijk}^l + c_{ikj}^l over all
/// index tuples; zero iff the bracket is totally antisymmetric.
Rat skew_residual(const TriBracket& b);

/// Max defect of the twisted fundamental identity
///   mu (alpha x alpha x mu) (1 - omega_1 - omega_2 - omega_3) = 0
/// over all basis 5-tuples.
Rat hom_jacobi_residual(const HomTriAlgebra& alg);

/// Max defect of alpha([x,y,z]) - [alpha x, alpha y, alpha z] over basis
/// triples of alg's own bracket and twist.
Rat multiplicative_residual(const HomTriAlgebra& alg);

/// Same defect for an arbitrary candidate endomorphism phi of a bracket.
Rat morphism_residual(const TriBracket& b, const Matrix& phi);

/// Max defect of the alpha^k-derivation property of D:
///   D[x,y,z] = [Dx, a^k y, a^k z] + [a^k x, Dy, a^k z] + [a^k x, a^k y, Dz]
/// combined with the commutation defect D alpha - alpha D. Negative k
/// requires alpha to be exactly invertible.
Rat derivation_residual(const HomTriAlgebra& alg, const Matrix& d, int k);

/// Matrix of z -> [x, y, alpha^k z] for alpha-fixed x and y; throws Error
/// carrying the fixed-point residual when alpha(x) != x or alpha(y) != y.
Matrix inner_derivation(const HomTriAlgebra& alg, const Vec& x, const Vec& y, int k);

/// Matrix of the adjoint action z -> [alpha x, alpha y, z].
Matrix ad1(const HomTriAlgebra& alg, const Vec& x, const Vec& y);

/// Twist construction: from a bracket satisfying the untwisted identities
/// and an endomorphism phi, the algebra (phi o [.,.,.], phi). Rejects phi
/// with a nonzero morphism residual.
HomTriAlgebra twist(const TriBracket& b, const Matrix& phi);

}  // namespace trihom
