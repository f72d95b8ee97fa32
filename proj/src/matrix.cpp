#include "trihom/matrix.hpp"

#include <cstddef>

namespace trihom {

Vec basis_vec(int n, int index) {
  Vec v(n);
  v[index] = Scalar(1);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Rat vec_max_abs(const Vec& v) {
  Rat m(0);
  for (const Scalar& s : v) {
    Rat a = s.magnitude();
    if (a > m) m = a;
  }
  return m;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Rat Matrix::max_abs() const {
  Rat m(0);
  for (const Scalar& s : a_) {
    Rat a = s.magnitude();
    if (a > m) m = a;
  }
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix/vector dimension mismatch");
  Vec out(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < rows_; ++r) {
      if (at(r, c).is_zero()) continue;
      out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in +");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in -");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < r.a_.size(); ++i)
    if (!m.a_[i].is_zero()) r.a_[i] = c * m.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::optional<Matrix> matrix_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  int n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Scalar d = work.at(col, col);
    for (int c = 0; c < n; ++c) {
      work.at(col, c) /= d;
      inv.at(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      Scalar f = work.at(r, col);
      for (int c = 0; c < n; ++c) {
        work.at(r, c) -= f * work.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

Matrix matrix_power(const Matrix& m, int k) {
  if (m.rows() != m.cols()) throw Error("power of a non-square matrix");
  Matrix base = m;
  if (k < 0) {
    auto inv = matrix_inverse(m);
    if (!inv) throw Error("negative power of a singular matrix");
    base = *inv;
    k = -k;
  }
  Matrix result = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) result = result * base;
  return result;
}

std::vector<Vec> nullspace(const Matrix& m) {
  int rows = m.rows(), cols = m.cols();
  Matrix work = m;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int rr = r; rr < rows; ++rr)
      if (!work.at(rr, c).is_zero()) {
        pivot = rr;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int cc = 0; cc < cols; ++cc) std::swap(work.at(pivot, cc), work.at(r, cc));
    Scalar d = work.at(r, c);
    for (int cc = 0; cc < cols; ++cc) work.at(r, cc) /= d;
    for (int rr = 0; rr < rows; ++rr) {
      if (rr == r || work.at(rr, c).is_zero()) continue;
      Scalar f = work.at(rr, c);
      for (int cc = 0; cc < cols; ++cc) work.at(rr, cc) -= f * work.at(r, cc);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = Scalar(1);
    for (std::size_t pr = 0; pr < pivot_col.size(); ++pr)
      v[pivot_col[pr]] = -work.at(static_cast<int>(pr), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace trihom
