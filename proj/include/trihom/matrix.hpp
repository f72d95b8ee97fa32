#pragma once

#include <optional>
#include <vector>

#include "trihom/scalar.hpp"

namespace trihom {

/// Coordinate vector over the exact scalar field.
using Vec = std::vector<Scalar>;

Vec basis_vec(int n, int index);  // index is 0-based
bool vec_is_zero(const Vec& v);
Rat vec_max_abs(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

/// Dense exact matrix; rows and columns are 0-based internally.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// Column c as a vector (the image of the c-th basis vector).
  Vec col(int c) const;

  Matrix transpose() const;
  bool is_zero() const;
  Rat max_abs() const;

  Vec apply(const Vec& v) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

/// Exact inverse via Gauss-Jordan elimination; empty when singular.
std::optional<Matrix> matrix_inverse(const Matrix& m);

/// Exact power of a square matrix. Negative exponents require exact
/// invertibility and otherwise throw Error.
Matrix matrix_power(const Matrix& m, int k);

/// Exact basis of the right nullspace {v : m v = 0}.
std::vector<Vec> nullspace(const Matrix& m);

}  // namespace trihom
