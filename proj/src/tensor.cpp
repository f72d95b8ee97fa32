#include "trihom/tensor.hpp"

#include <array>

namespace trihom {

namespace {

std::size_t pow_size(int dim, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(dim);
  return s;
}

}  // namespace

Tensor::Tensor(int dim, int arity) : dim_(dim), arity_(arity) {
  if (dim < 1) throw Error("tensor dimension must be >= 1");
  if (arity < 0) throw Error("tensor arity must be >= 0");
  e_.assign(pow_size(dim, arity), Scalar());
}

Tensor Tensor::basis(int dim, std::span<const int> indices) {
  Tensor t(dim, static_cast<int>(indices.size()));
  t.at(indices) = Scalar(1);
  return t;
}

Tensor Tensor::from_vec(const Vec& v) {
  Tensor t(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) t.e_[i] = v[i];
  return t;
}

std::size_t Tensor::encode(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != arity_) throw Error("tensor index arity mismatch");
  std::size_t flat = 0;
  for (int s = 0; s < arity_; ++s) {
    if (idx[s] < 0 || idx[s] >= dim_) throw Error("tensor index out of range");
    flat = flat * dim_ + static_cast<std::size_t>(idx[s]);
  }
  return flat;
}

void Tensor::decode(std::size_t flat, std::span<int> idx) const {
  for (int s = arity_ - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(flat % dim_);
    flat /= dim_;
  }
}

bool Tensor::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Rat Tensor::max_abs() const {
  Rat m(0);
  for (const Scalar& s : e_) {
    Rat a = s.magnitude();
    if (a > m) m = a;
  }
  return m;
}

Vec Tensor::to_vec() const {
  if (arity_ != 1) throw Error("to_vec requires an arity-1 tensor");
  return Vec(e_.begin(), e_.end());
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (dim_ != o.dim_ || arity_ != o.arity_) throw Error("tensor shape mismatch in +");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (dim_ != o.dim_ || arity_ != o.arity_) throw Error("tensor shape mismatch in -");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  Tensor r = a;
  r += b;
  return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  Tensor r = a;
  r -= b;
  return r;
}

Tensor operator*(const Scalar& c, const Tensor& t) {
  Tensor r(t.dim_, t.arity_);
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < t.e_.size(); ++i)
    if (!t.e_[i].is_zero()) r.e_[i] = c * t.e_[i];
  return r;
}

Tensor Tensor::operator-() const { return Scalar(-1) * *this; }

bool operator==(const Tensor& a, const Tensor& b) {
  return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.e_ == b.e_;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw Error("tensor dimension mismatch in product");
  Tensor r(a.dim(), a.arity() + b.arity());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i * b.size() + j] = a[i] * b[j];
    }
  }
  return r;
}

Tensor permute_slots(const Tensor& t, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != t.arity()) throw Error("slot permutation arity mismatch");
  Tensor out(t.dim(), t.arity());
  std::vector<int> idx(t.arity()), odx(t.arity());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (t[flat].is_zero()) continue;
    t.decode(flat, idx);
    for (int s = 0; s < t.arity(); ++s) odx[s] = idx[perm[s]];
    out.at(odx) = t[flat];
  }
  return out;
}

Tensor sigma_switch(const Tensor& t, int i, int j) {
  if (i < 1 || j < i || j > t.arity()) throw Error("switching slots out of range");
  std::vector<int> perm(t.arity());
  for (int s = 0; s < t.arity(); ++s) perm[s] = s;
  std::swap(perm[i - 1], perm[j - 1]);
  return permute_slots(t, perm);
}

Tensor omega(const Tensor& t, int m) {
  if (t.arity() != 5) throw Error("omega operators act on arity-5 tensors");
  static constexpr std::array<std::array<int, 5>, 3> kPerm = {{
      {2, 3, 0, 1, 4},  // x3 x4 x1 x2 x5
      {3, 4, 0, 1, 2},  // x4 x5 x1 x2 x3
      {4, 2, 0, 1, 3},  // x5 x3 x1 x2 x4
  }};
  if (m < 1 || m > 3) throw Error("omega index must be 1, 2 or 3");
  return permute_slots(t, kPerm[m - 1]);
}

Tensor insert_at(const Tensor& t, const Tensor& a, int pos) {
  if (a.arity() != 1) throw Error("inserted factor must have arity 1");
  if (a.dim() != t.dim()) throw Error("tensor dimension mismatch in insert");
  if (pos < 1 || pos > t.arity() + 1) throw Error("insertion slot out of range");
  Tensor out(t.dim(), t.arity() + 1);
  std::vector<int> idx(t.arity()), odx(t.arity() + 1);
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (t[flat].is_zero()) continue;
    t.decode(flat, idx);
    for (int c = 0; c < a.dim(); ++c) {
      if (a[c].is_zero()) continue;
      for (int s = 0; s < pos - 1; ++s) odx[s] = idx[s];
      odx[pos - 1] = c;
      for (int s = pos - 1; s < t.arity(); ++s) odx[s + 1] = idx[s];
      out.at(odx) += t[flat] * a[c];
    }
  }
  return out;
}

Tensor insert_at(const Tensor& t, const Vec& a, int pos) {
  return insert_at(t, Tensor::from_vec(a), pos);
}

Tensor apply_slot_maps(std::span<const Matrix> maps, const Tensor& t) {
  if (static_cast<int>(maps.size()) != t.arity()) throw Error("slot map count must equal arity");
  for (const Matrix& m : maps)
    if (m.rows() != t.dim() || m.cols() != t.dim()) throw Error("slot map shape mismatch");
  Tensor cur = t;
  std::vector<int> idx(t.arity());
  for (int s = 0; s < t.arity(); ++s) {
    const Matrix& m = maps[s];
    Tensor next(t.dim(), t.arity());
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      if (cur[flat].is_zero()) continue;
      cur.decode(flat, idx);
      int src = idx[s];
      for (int dst = 0; dst < t.dim(); ++dst) {
        if (m.at(dst, src).is_zero()) continue;
        idx[s] = dst;
        next.at(idx) += m.at(dst, src) * cur[flat];
      }
      idx[s] = src;
    }
    cur = std::move(next);
  }
  return cur;
}

Tensor wedge3(const Vec& u, const Vec& v, const Vec& w) {
  if (u.size() != v.size() || v.size() != w.size())
    throw Error("wedge3 arguments must share a dimension");
  static constexpr std::array<std::array<int, 3>, 6> kPerm = {{
      {0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0},
  }};
  static constexpr std::array<int, 6> kSign = {1, -1, 1, 1, -1, -1};
  const Vec* args[3] = {&u, &v, &w};
  int n = static_cast<int>(u.size());
  Tensor out(n, 3);
  std::array<int, 3> idx{};
  for (int p = 0; p < 6; ++p) {
    Scalar sign(kSign[p]);
    for (idx[0] = 0; idx[0] < n; ++idx[0]) {
      const Scalar& a = (*args[kPerm[p][0]])[idx[0]];
      if (a.is_zero()) continue;
      for (idx[1] = 0; idx[1] < n; ++idx[1]) {
        const Scalar& b = (*args[kPerm[p][1]])[idx[1]];
        if (b.is_zero()) continue;
        for (idx[2] = 0; idx[2] < n; ++idx[2]) {
          const Scalar& c = (*args[kPerm[p][2]])[idx[2]];
          if (c.is_zero()) continue;
          out.at(idx) += sign * (a * b * c);
        }
      }
    }
  }
  return out;
}

}  // namespace trihom
