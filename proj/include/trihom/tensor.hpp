#pragma once

#include <span>
#include <vector>

#include "trihom/matrix.hpp"

namespace trihom {

/// Dense tensor of a fixed arity over an n-dimensional space: an element
/// of L^{otimes k} stored as n^k exact scalars. Arity 0 is a single
/// scalar, arity 1 a vector. Slot arguments of the operations below are
/// 1-based, matching the usual tensor-leg numbering.
class Tensor {
 public:
  Tensor() : dim_(1), arity_(0), e_(1) {}
  Tensor(int dim, int arity);

  /// Basis tensor e_{i_1} x ... x e_{i_k} for 0-based indices.
  static Tensor basis(int dim, std::span<const int> indices);
  static Tensor from_vec(const Vec& v);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  std::size_t size() const { return e_.size(); }

  Scalar& operator[](std::size_t flat) { return e_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return e_[flat]; }

  Scalar& at(std::span<const int> idx) { return e_[encode(idx)]; }
  const Scalar& at(std::span<const int> idx) const { return e_[encode(idx)]; }

  std::size_t encode(std::span<const int> idx) const;
  void decode(std::size_t flat, std::span<int> idx) const;

  bool is_zero() const;
  Rat max_abs() const;
  Vec to_vec() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const Scalar& c, const Tensor& t);
  Tensor operator-() const;
  friend bool operator==(const Tensor& a, const Tensor& b);
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

 private:
  int dim_;
  int arity_;
  std::vector<Scalar> e_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);

/// Relabel slots: output slot s holds the content of input slot perm[s]
/// (0-based), i.e. the linear extension of
///   e_{i_1} x ... x e_{i_k}  ->  e_{i_{perm[1]}} x ... x e_{i_{perm[k]}}.
Tensor permute_slots(const Tensor& t, std::span<const int> perm);

/// Switching operator exchanging slots i and j (1-based, i <= j).
Tensor sigma_switch(const Tensor& t, int i, int j);

/// The three fixed 5-slot permutations entering the Hom-Jacobi and
/// Hom-co-Jacobi identities:
///   omega_1: x1 x2 x3 x4 x5 -> x3 x4 x1 x2 x5
///   omega_2: x1 x2 x3 x4 x5 -> x4 x5 x1 x2 x3
///   omega_3: x1 x2 x3 x4 x5 -> x5 x3 x1 x2 x4
/// Defined for arity 5 only; m must be 1, 2 or 3.
Tensor omega(const Tensor& t, int m);

/// Insert the vector a as a new slot at position pos (1-based, up to
/// arity+1); bilinear in (t, a).
Tensor insert_at(const Tensor& t, const Tensor& a, int pos);
Tensor insert_at(const Tensor& t, const Vec& a, int pos);

/// Kronecker action maps[1] x ... x maps[k] on an arity-k tensor; each
/// map must be dim x dim square.
Tensor apply_slot_maps(std::span<const Matrix> maps, const Tensor& t);

/// Alternating sum over S3 of the signed slot permutations of u x v x w.
Tensor wedge3(const Vec& u, const Vec& v, const Vec& w);

}  // namespace trihom
