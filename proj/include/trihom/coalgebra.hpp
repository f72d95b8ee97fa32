#pragma once

#include <vector>

#include "trihom/algebra.hpp"
#include "trihom/tensor.hpp"

namespace trihom {

/// Cobracket Delta : L -> L x L x L stored as one arity-3 tensor per
/// basis vector.
class CoBracket {
 public:
  static CoBracket zero(int dim);
  explicit CoBracket(std::vector<Tensor> images);

  int dim() const { return dim_; }
  const Tensor& of_basis(int i) const { return images_[i]; }
  Tensor& of_basis(int i) { return images_[i]; }

  /// Linear extension to an arbitrary vector.
  Tensor eval(const Vec& x) const;

  friend CoBracket operator+(const CoBracket& a, const CoBracket& b);
  friend bool operator==(const CoBracket& a, const CoBracket& b);
  friend bool operator!=(const CoBracket& a, const CoBracket& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<Tensor> images_;
};

struct HomTriCoalgebra {
  CoBracket cobracket;
  Matrix alpha;
};

/// Max defect of Delta + sigma_12 Delta and Delta + sigma_23 Delta on the
/// basis.
Rat coskew_residual(const CoBracket& d);

/// Defect tensor of the Hom-co-Jacobi identity at one basis vector:
/// (1 - omega_1 - omega_2 - omega_3)(alpha x alpha x Delta) Delta(e_i),
/// where Delta expands the third slot.
Tensor cojacobi_defect(const HomTriCoalgebra& co, int basis_index);

/// Max magnitude of the co-Jacobi defect over the basis.
Rat cojacobi_residual(const HomTriCoalgebra& co);

/// Max defect of Delta(alpha x) - alpha^{x3} Delta(x) on the basis.
Rat comultiplicative_residual(const HomTriCoalgebra& co);

/// Max defect of the derivation compatibility
///   Delta[x,y,z] = ad13(x,y) Delta(z) + ad13(y,z) Delta(x) + ad13(z,x) Delta(y)
/// over basis triples, where ad13(u,v) acts as ad1(u,v) in one slot and
/// alpha in the others, summed over the three slots.
Rat derivation_compat_residual(const HomTriAlgebra& alg, const CoBracket& d);

}  // namespace trihom
