#include "trihom/algebra.hpp"

#include <array>
#include <set>
#include <tuple>

namespace trihom {

namespace {

std::size_t table_size(int n) {
  auto s = static_cast<std::size_t>(n);
  return s * s * s * s;
}

Rat max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace

TriBracket TriBracket::zero(int dim) {
  return TriBracket(dim, std::vector<Scalar>(table_size(dim)));
}

TriBracket TriBracket::from_generators(int dim, std::span<const BracketGenerator> gens) {
  if (dim < 1) throw Error("bracket dimension must be >= 1");
  std::vector<Scalar> c(table_size(dim));
  std::set<std::tuple<int, int, int>> seen;
  // The six signed images of each generator triple.
  static constexpr std::array<std::array<int, 3>, 6> kPerm = {{
      {0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0},
  }};
  static constexpr std::array<int, 6> kSign = {1, -1, 1, 1, -1, -1};
  for (const BracketGenerator& g : gens) {
    if (g.i < 1 || g.j < 1 || g.k < 1 || g.i > dim || g.j > dim || g.k > dim)
      throw Error("bracket generator index out of range");
    if (!(g.i < g.j && g.j < g.k))
      throw Error("bracket generators require strictly increasing indices i<j<k");
    if (static_cast<int>(g.value.size()) != dim)
      throw Error("bracket generator value has wrong dimension");
    if (!seen.insert({g.i, g.j, g.k}).second)
      throw Error("duplicate bracket generator for one index triple");
    int idx[3] = {g.i - 1, g.j - 1, g.k - 1};
    for (int p = 0; p < 6; ++p) {
      int a = idx[kPerm[p][0]], b = idx[kPerm[p][1]], cc = idx[kPerm[p][2]];
      for (int l = 0; l < dim; ++l) {
        if (g.value[l].is_zero()) continue;
        c[((static_cast<std::size_t>(a) * dim + b) * dim + cc) * dim + l] =
            Scalar(kSign[p]) * g.value[l];
      }
    }
  }
  return TriBracket(dim, std::move(c));
}

TriBracket TriBracket::from_dense(int dim, std::vector<Scalar> c) {
  if (c.size() != table_size(dim)) throw Error("dense bracket table has wrong size");
  return TriBracket(dim, std::move(c));
}

Vec TriBracket::bracket_basis(int i, int j, int k) const {
  Vec v(dim_);
  for (int l = 0; l < dim_; ++l) v[l] = c(i, j, k, l);
  return v;
}

Vec TriBracket::eval(const Vec& x, const Vec& y, const Vec& z) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_ ||
      static_cast<int>(z.size()) != dim_)
    throw Error("bracket argument dimension mismatch");
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        if (z[k].is_zero()) continue;
        Scalar w = xy * z[k];
        for (int l = 0; l < dim_; ++l) {
          if (c(i, j, k, l).is_zero()) continue;
          out[l] += w * c(i, j, k, l);
        }
      }
    }
  }
  return out;
}

bool TriBracket::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

HomTriAlgebra::HomTriAlgebra(TriBracket bracket, Matrix alpha)
    : bracket_(std::move(bracket)), alpha_(std::move(alpha)) {
  if (alpha_.rows() != bracket_.dim() || alpha_.cols() != bracket_.dim())
    throw Error("twist map shape does not match the algebra dimension");
}

Rat skew_residual(const TriBracket& b) {
  int n = b.dim();
  Rat res(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          res = max_rat(res, (b.c(i, j, k, l) + b.c(j, i, k, l)).magnitude());
          res = max_rat(res, (b.c(i, j, k, l) + b.c(i, k, j, l)).magnitude());
        }
  return res;
}

Rat hom_jacobi_residual(const HomTriAlgebra& alg) {
  int n = alg.dim();
  const TriBracket& b = alg.bracket();
  // outer[a][b][m] = [alpha e_a, alpha e_b, e_m]
  std::vector<Vec> outer(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    Vec ua = alg.alpha().col(a);
    for (int bb = 0; bb < n; ++bb) {
      Vec ub = alg.alpha().col(bb);
      for (int m = 0; m < n; ++m)
        outer[(static_cast<std::size_t>(a) * n + bb) * n + m] =
            b.eval(ua, ub, basis_vec(n, m));
    }
  }
  auto nested = [&](int j1, int j2, int j3, int j4, int j5) {
    Vec inner = b.bracket_basis(j3, j4, j5);
    Vec out(n);
    for (int m = 0; m < n; ++m) {
      if (inner[m].is_zero()) continue;
      const Vec& o = outer[(static_cast<std::size_t>(j1) * n + j2) * n + m];
      for (int l = 0; l < n; ++l)
        if (!o[l].is_zero()) out[l] += inner[m] * o[l];
    }
    return out;
  };
  Rat res(0);
  std::array<int, 5> t{};
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = 0; t[1] < n; ++t[1])
      for (t[2] = 0; t[2] < n; ++t[2])
        for (t[3] = 0; t[3] < n; ++t[3])
          for (t[4] = 0; t[4] < n; ++t[4]) {
            Vec acc = nested(t[0], t[1], t[2], t[3], t[4]);
            // omega_1, omega_2, omega_3 images of the basis 5-tuple
            acc = vec_sub(acc, nested(t[2], t[3], t[0], t[1], t[4]));
            acc = vec_sub(acc, nested(t[3], t[4], t[0], t[1], t[2]));
            acc = vec_sub(acc, nested(t[4], t[2], t[0], t[1], t[3]));
            res = max_rat(res, vec_max_abs(acc));
          }
  return res;
}

Rat multiplicative_residual(const HomTriAlgebra& alg) {
  return morphism_residual(alg.bracket(), alg.alpha());
}

Rat morphism_residual(const TriBracket& b, const Matrix& phi) {
  if (phi.rows() != b.dim() || phi.cols() != b.dim())
    throw Error("endomorphism shape does not match the bracket dimension");
  int n = b.dim();
  std::vector<Vec> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = phi.col(i);
  Rat res(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = phi.apply(b.bracket_basis(i, j, k));
        Vec rhs = b.eval(cols[i], cols[j], cols[k]);
        res = max_rat(res, vec_max_abs(vec_sub(lhs, rhs)));
      }
  return res;
}

Rat derivation_residual(const HomTriAlgebra& alg, const Matrix& d, int k) {
  int n = alg.dim();
  if (d.rows() != n || d.cols() != n) throw Error("derivation candidate shape mismatch");
  Matrix ak = matrix_power(alg.alpha(), k);
  const TriBracket& b = alg.bracket();
  Rat res = (d * alg.alpha() - alg.alpha() * d).max_abs();
  for (int i = 0; i < n; ++i) {
    Vec di = d.col(i), ai = ak.col(i);
    for (int j = 0; j < n; ++j) {
      Vec dj = d.col(j), aj = ak.col(j);
      for (int kk = 0; kk < n; ++kk) {
        Vec dk = d.col(kk), akk = ak.col(kk);
        Vec lhs = d.apply(b.bracket_basis(i, j, kk));
        Vec rhs = vec_add(vec_add(b.eval(di, aj, akk), b.eval(ai, dj, akk)),
                          b.eval(ai, aj, dk));
        res = max_rat(res, vec_max_abs(vec_sub(lhs, rhs)));
      }
    }
  }
  return res;
}

Matrix inner_derivation(const HomTriAlgebra& alg, const Vec& x, const Vec& y, int k) {
  Rat fixed = max_rat(vec_max_abs(vec_sub(alg.alpha_apply(x), x)),
                      vec_max_abs(vec_sub(alg.alpha_apply(y), y)));
  if (sgn(fixed) != 0)
    throw Error("inner derivation requires alpha-fixed arguments (fixed-point residual " +
                rat_to_string(fixed) + ")");
  int n = alg.dim();
  Matrix ak = matrix_power(alg.alpha(), k);
  Matrix m(n, n);
  for (int z = 0; z < n; ++z) {
    Vec img = alg.bracket_eval(x, y, ak.col(z));
    for (int r = 0; r < n; ++r) m.at(r, z) = img[r];
  }
  return m;
}

Matrix ad1(const HomTriAlgebra& alg, const Vec& x, const Vec& y) {
  int n = alg.dim();
  Vec ax = alg.alpha_apply(x), ay = alg.alpha_apply(y);
  Matrix m(n, n);
  for (int z = 0; z < n; ++z) {
    Vec img = alg.bracket_eval(ax, ay, basis_vec(n, z));
    for (int r = 0; r < n; ++r) m.at(r, z) = img[r];
  }
  return m;
}

HomTriAlgebra twist(const TriBracket& b, const Matrix& phi) {
  Rat res = morphism_residual(b, phi);
  if (sgn(res) != 0)
    throw Error("twist requires an algebra endomorphism (morphism residual " +
                rat_to_string(res) + ")");
  int n = b.dim();
  std::vector<Scalar> c(static_cast<std::size_t>(n) * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec img = phi.apply(b.bracket_basis(i, j, k));
        for (int l = 0; l < n; ++l)
          c[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = img[l];
      }
  return HomTriAlgebra(TriBracket::from_dense(n, std::move(c)), phi);
}

}  // namespace trihom
