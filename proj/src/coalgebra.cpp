#include "trihom/coalgebra.hpp"

#include <array>

namespace trihom {

namespace {

Rat max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace

CoBracket CoBracket::zero(int dim) {
  return CoBracket(std::vector<Tensor>(dim, Tensor(dim, 3)));
}

CoBracket::CoBracket(std::vector<Tensor> images) : dim_(static_cast<int>(images.size())), images_(std::move(images)) {
  if (dim_ < 1) throw Error("cobracket needs at least one basis image");
  for (const Tensor& t : images_)
    if (t.arity() != 3 || t.dim() != dim_)
      throw Error("cobracket images must be arity-3 tensors of the algebra dimension");
}

Tensor CoBracket::eval(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw Error("cobracket argument dimension mismatch");
  Tensor out(dim_, 3);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    out += x[i] * images_[i];
  }
  return out;
}

CoBracket operator+(const CoBracket& a, const CoBracket& b) {
  if (a.dim_ != b.dim_) throw Error("cobracket dimension mismatch");
  std::vector<Tensor> imgs;
  imgs.reserve(a.dim_);
  for (int i = 0; i < a.dim_; ++i) imgs.push_back(a.images_[i] + b.images_[i]);
  return CoBracket(std::move(imgs));
}

bool operator==(const CoBracket& a, const CoBracket& b) {
  return a.dim_ == b.dim_ && a.images_ == b.images_;
}

Rat coskew_residual(const CoBracket& d) {
  Rat res(0);
  for (int i = 0; i < d.dim(); ++i) {
    const Tensor& t = d.of_basis(i);
    res = max_rat(res, (t + sigma_switch(t, 1, 2)).max_abs());
    res = max_rat(res, (t + sigma_switch(t, 2, 3)).max_abs());
  }
  return res;
}

Tensor cojacobi_defect(const HomTriCoalgebra& co, int basis_index) {
  int n = co.cobracket.dim();
  const Tensor& t = co.cobracket.of_basis(basis_index);
  Tensor five(n, 3 + 2);
  std::array<int, 3> idx{};
  std::array<int, 5> odx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1])
      for (idx[2] = 0; idx[2] < n; ++idx[2]) {
        const Scalar& w = t.at(idx);
        if (w.is_zero()) continue;
        const Tensor& inner = co.cobracket.of_basis(idx[2]);
        for (int c1 = 0; c1 < n; ++c1) {
          if (co.alpha.at(c1, idx[0]).is_zero()) continue;
          for (int c2 = 0; c2 < n; ++c2) {
            if (co.alpha.at(c2, idx[1]).is_zero()) continue;
            Scalar w2 = w * co.alpha.at(c1, idx[0]) * co.alpha.at(c2, idx[1]);
            odx[0] = c1;
            odx[1] = c2;
            for (std::size_t flat = 0; flat < inner.size(); ++flat) {
              if (inner[flat].is_zero()) continue;
              std::array<int, 3> in_idx{};
              inner.decode(flat, in_idx);
              odx[2] = in_idx[0];
              odx[3] = in_idx[1];
              odx[4] = in_idx[2];
              five.at(odx) += w2 * inner[flat];
            }
          }
        }
      }
  // The co-Jacobi identity is the arrow-reversed dual of the Jacobi
  // identity, so the slot permutations act transposed (inverted) here:
  // the forward reading breaks the identity on every coboundary
  // cobracket while the transposed one makes it hold.
  static constexpr std::array<std::array<int, 5>, 3> kInverse = {{
      {2, 3, 0, 1, 4},
      {2, 3, 4, 0, 1},
      {2, 3, 1, 4, 0},
  }};
  Tensor out = five;
  for (const auto& perm : kInverse) out -= permute_slots(five, perm);
  return out;
}

Rat cojacobi_residual(const HomTriCoalgebra& co) {
  Rat res(0);
  for (int i = 0; i < co.cobracket.dim(); ++i)
    res = max_rat(res, cojacobi_defect(co, i).max_abs());
  return res;
}

Rat comultiplicative_residual(const HomTriCoalgebra& co) {
  int n = co.cobracket.dim();
  std::vector<Matrix> maps(3, co.alpha);
  Rat res(0);
  for (int i = 0; i < n; ++i) {
    Tensor lhs = co.cobracket.eval(co.alpha.col(i));
    Tensor rhs = apply_slot_maps(maps, co.cobracket.of_basis(i));
    res = max_rat(res, (lhs - rhs).max_abs());
  }
  return res;
}

Rat derivation_compat_residual(const HomTriAlgebra& alg, const CoBracket& d) {
  int n = alg.dim();
  if (d.dim() != n) throw Error("cobracket dimension does not match the algebra");
  // ad13(u, v) applied to an arity-3 tensor: ad1 in one slot, alpha in
  // the others, summed over the three slot placements.
  auto ad13_apply = [&](const Matrix& ad, const Tensor& t) {
    Tensor out(n, 3);
    for (int s = 0; s < 3; ++s) {
      std::vector<Matrix> maps(3, alg.alpha());
      maps[s] = ad;
      out += apply_slot_maps(maps, t);
    }
    return out;
  };
  std::vector<Matrix> ad_table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ad_table[static_cast<std::size_t>(i) * n + j] = ad1(alg, basis_vec(n, i), basis_vec(n, j));
  Rat res(0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Tensor lhs = d.eval(alg.bracket().bracket_basis(x, y, z));
        Tensor rhs = ad13_apply(ad_table[static_cast<std::size_t>(x) * n + y], d.of_basis(z));
        rhs += ad13_apply(ad_table[static_cast<std::size_t>(y) * n + z], d.of_basis(x));
        rhs += ad13_apply(ad_table[static_cast<std::size_t>(z) * n + x], d.of_basis(y));
        res = max_rat(res, (lhs - rhs).max_abs());
      }
  return res;
}

}  // namespace trihom
