#include "trihom/representation.hpp"

namespace trihom {

namespace {

Rat max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }

Matrix kron3(const Matrix& m1, const Matrix& m2, const Matrix& m3) {
  int n = m1.rows();
  int m = n * n * n;
  Matrix out(m, m);
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < n; ++b1) {
      if (m1.at(a1, b1).is_zero()) continue;
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          if (m2.at(a2, b2).is_zero()) continue;
          Scalar w12 = m1.at(a1, b1) * m2.at(a2, b2);
          for (int a3 = 0; a3 < n; ++a3)
            for (int b3 = 0; b3 < n; ++b3) {
              if (m3.at(a3, b3).is_zero()) continue;
              out.at((a1 * n + a2) * n + a3, (b1 * n + b2) * n + b3) = w12 * m3.at(a3, b3);
            }
        }
    }
  return out;
}

}  // namespace

Representation::Representation(int alg_dim, Matrix a, std::vector<Matrix> upper)
    : n_(alg_dim), m_(a.rows()), a_(std::move(a)), upper_(std::move(upper)) {
  if (a_.rows() != a_.cols()) throw Error("structure map must be square");
  if (static_cast<int>(upper_.size()) != n_ * (n_ - 1) / 2)
    throw Error("representation needs one matrix per basis pair i<j");
  for (const Matrix& m : upper_)
    if (m.rows() != m_ || m.cols() != m_) throw Error("representation matrix shape mismatch");
}

Representation Representation::from_full(int alg_dim, Matrix a,
                                         const std::vector<Matrix>& pairs) {
  if (static_cast<int>(pairs.size()) != alg_dim * alg_dim)
    throw Error("full representation table needs n*n matrices");
  std::vector<Matrix> upper;
  for (int i = 0; i < alg_dim; ++i) {
    if (!pairs[i * alg_dim + i].is_zero())
      throw Error("representation table violates rho(x, x) = 0");
    for (int j = i + 1; j < alg_dim; ++j) {
      const Matrix& up = pairs[i * alg_dim + j];
      if (up + pairs[j * alg_dim + i] != Matrix::zero(up.rows(), up.cols()))
        throw Error("representation table violates antisymmetry");
      upper.push_back(up);
    }
  }
  return Representation(alg_dim, std::move(a), std::move(upper));
}

Matrix Representation::rho_basis(int i, int j) const {
  if (i == j) return Matrix::zero(m_, m_);
  if (i < j) return upper_[pair_index(i, j)];
  return Scalar(-1) * upper_[pair_index(j, i)];
}

Matrix Representation::rho(const Vec& x, const Vec& y) const {
  Matrix out(m_, m_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Scalar w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero()) continue;
      out = out + w * upper_[pair_index(i, j)];
    }
  return out;
}

Representation adjoint_rep(const HomTriAlgebra& alg) {
  int n = alg.dim();
  std::vector<Matrix> upper;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      upper.push_back(ad1(alg, basis_vec(n, i), basis_vec(n, j)));
  return Representation(n, alg.alpha(), std::move(upper));
}

Representation local_rep(const HomTriAlgebra& alg, int slot) {
  if (slot < 1 || slot > 3) throw Error("local representation slot must be 1, 2 or 3");
  int n = alg.dim();
  const Matrix& a = alg.alpha();
  std::vector<Matrix> upper;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix d = ad1(alg, basis_vec(n, i), basis_vec(n, j));
      upper.push_back(kron3(slot == 1 ? d : a, slot == 2 ? d : a, slot == 3 ? d : a));
    }
  return Representation(n, kron3(a, a, a), std::move(upper));
}

std::array<Rat, 3> rep_residuals(const HomTriAlgebra& alg, const Representation& rep) {
  int n = alg.dim();
  const TriBracket& br = alg.bracket();
  std::vector<Vec> acol(n);
  for (int i = 0; i < n; ++i) acol[i] = alg.alpha().col(i);
  const Matrix& a = rep.structure_map();

  Rat r1(0), r2(0), r3(0);
  // rho(alpha e_i, alpha e_j), cached for the quadruple loops below.
  std::vector<Matrix> rho_aa(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rho_aa[static_cast<std::size_t>(i) * n + j] = rep.rho(acol[i], acol[j]);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r1 = max_rat(r1, (rho_aa[static_cast<std::size_t>(i) * n + j] * a - a * rep.rho_basis(i, j)).max_abs());

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec bxyz = br.bracket_basis(x, y, z);
        for (int w = 0; w < n; ++w) {
          Matrix rho_b_aw = rep.rho(bxyz, acol[w]);
          Matrix lhs2 = rho_aa[static_cast<std::size_t>(y) * n + z] * rep.rho_basis(x, w) +
                        rho_aa[static_cast<std::size_t>(z) * n + x] * rep.rho_basis(y, w) +
                        rho_aa[static_cast<std::size_t>(x) * n + y] * rep.rho_basis(z, w) -
                        rho_b_aw * a;
          r2 = max_rat(r2, lhs2.max_abs());
          Vec bxyw = br.bracket_basis(x, y, w);
          Matrix lhs3 = rho_aa[static_cast<std::size_t>(z) * n + w] * rep.rho_basis(x, y) -
                        rho_aa[static_cast<std::size_t>(x) * n + y] * rep.rho_basis(z, w) +
                        rho_b_aw * a + rep.rho(acol[z], bxyw) * a;
          r3 = max_rat(r3, lhs3.max_abs());
        }
      }
  return {r1, r2, r3};
}

Cochain::Cochain(int p, int alg_dim, int v_dim) : p_(p), n_(alg_dim), m_(v_dim) {
  if (p < 0) throw Error("cochain arity must be >= 0");
  std::size_t tuples = 1;
  for (int i = 0; i < p; ++i) tuples *= static_cast<std::size_t>(n_);
  f_.assign(tuples * m_, Scalar());
}

Cochain Cochain::from_matrix(const Matrix& f) {
  Cochain c(1, f.cols(), f.rows());
  for (int i = 0; i < f.cols(); ++i)
    for (int v = 0; v < f.rows(); ++v) c.coeff(i, v) = f.at(v, i);
  return c;
}

std::size_t Cochain::tuple_count() const { return f_.size() / m_; }

std::size_t Cochain::encode(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != p_) throw Error("cochain tuple arity mismatch");
  std::size_t flat = 0;
  for (int s = 0; s < p_; ++s) flat = flat * n_ + static_cast<std::size_t>(idx[s]);
  return flat;
}

Vec Cochain::eval_basis(std::span<const int> idx) const {
  std::size_t flat = encode(idx);
  Vec out(m_);
  for (int v = 0; v < m_; ++v) out[v] = coeff(flat, v);
  return out;
}

Vec Cochain::eval(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != p_) throw Error("cochain argument count mismatch");
  Vec out(m_);
  std::vector<int> idx(p_);
  std::size_t tuples = tuple_count();
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    for (int s = p_ - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rest % n_);
      rest /= n_;
    }
    Scalar w(1);
    bool zero = false;
    for (int s = 0; s < p_; ++s) {
      const Scalar& c = args[s][idx[s]];
      if (c.is_zero()) {
        zero = true;
        break;
      }
      w *= c;
    }
    if (zero) continue;
    for (int v = 0; v < m_; ++v) {
      if (coeff(flat, v).is_zero()) continue;
      out[v] += w * coeff(flat, v);
    }
  }
  return out;
}

Matrix Cochain::to_matrix() const {
  if (p_ != 1) throw Error("to_matrix requires a 1-cochain");
  Matrix f(m_, n_);
  for (int i = 0; i < n_; ++i)
    for (int v = 0; v < m_; ++v) f.at(v, i) = coeff(i, v);
  return f;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_ || a.m_ != b.m_) throw Error("cochain shape mismatch");
  Cochain r = a;
  for (std::size_t i = 0; i < r.f_.size(); ++i) r.f_[i] -= b.f_[i];
  return r;
}

Rat Cochain::max_abs() const {
  Rat m(0);
  for (const Scalar& s : f_) {
    Rat a = s.magnitude();
    if (a > m) m = a;
  }
  return m;
}

Rat is_cochain_residual(const Cochain& f, const Representation& rep, const Matrix& alpha) {
  int n = f.alg_dim(), p = f.arity();
  std::vector<Vec> acol(n);
  for (int i = 0; i < n; ++i) acol[i] = alpha.col(i);
  Rat res(0);
  std::vector<int> idx(p);
  std::vector<Vec> args(p);
  std::size_t tuples = f.tuple_count();
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    for (int s = p - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rest % n);
      rest /= n;
    }
    Vec lhs = rep.structure_map().apply(f.eval_basis(idx));
    for (int s = 0; s < p; ++s) args[s] = acol[idx[s]];
    Vec rhs = f.eval(args);
    Rat d = vec_max_abs(vec_sub(lhs, rhs));
    if (d > res) res = d;
  }
  return res;
}

Cochain coboundary(const HomTriAlgebra& alg, const Representation& rep, const Cochain& f) {
  int p = f.arity();
  if (p < 1) throw Error("coboundary is defined for arity >= 1");
  int n = alg.dim(), m = f.v_dim();
  if (n != alg.dim() || rep.v_dim() != m || rep.alg_dim() != n)
    throw Error("coboundary shape mismatch");
  bool odd = (p % 2 == 1);
  int big_n = odd ? (p + 1) / 2 : p / 2;
  Matrix apow = matrix_power(alg.alpha(), odd ? big_n - 1 : big_n);
  std::vector<Vec> pcol(n), acol(n);
  for (int i = 0; i < n; ++i) {
    pcol[i] = apow.col(i);
    acol[i] = alg.alpha().col(i);
  }

  int q = p + 2;
  Cochain out(q, n, m);
  std::vector<int> xs(q);
  std::size_t tuples = out.tuple_count();
  std::vector<int> sub;
  std::vector<Vec> dense;

  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    for (int s = q - 1; s >= 0; --s) {
      xs[s] = static_cast<int>(rest % n);
      rest /= n;
    }
    // Offsets of the labelled arguments inside xs: in the even case the
    // distinguished y sits at xs[0] and x_t at xs[t]; in the odd case x_t
    // sits at xs[t-1].
    auto xpos = [&](int t) { return odd ? t - 1 : t; };
    int last = 2 * big_n + 1;  // label of x_{2n+1}
    Vec val(m);

    auto add_rho_term = [&](int sign, int u, int v, const std::vector<int>& fargs) {
      Vec fv = f.eval_basis(fargs);
      if (vec_is_zero(fv)) return;
      Vec img = rep.rho(pcol[u], pcol[v]).apply(fv);
      if (sign > 0)
        val = vec_add(val, img);
      else
        val = vec_sub(val, img);
    };

    // Leading rho terms.
    sub.clear();
    if (!odd) sub.push_back(xs[0]);
    for (int t = 1; t <= last - 2; ++t) sub.push_back(xs[xpos(t)]);
    add_rho_term(+1, xs[xpos(last - 1)], xs[xpos(last)], sub);

    sub.clear();
    if (!odd) sub.push_back(xs[0]);
    for (int t = 1; t <= last - 3; ++t) sub.push_back(xs[xpos(t)]);
    sub.push_back(xs[xpos(last - 1)]);
    add_rho_term(-1, xs[xpos(last - 2)], xs[xpos(last)], sub);

    // Alternating sum over removed pairs.
    for (int k = 1; k <= big_n; ++k) {
      sub.clear();
      if (!odd) sub.push_back(xs[0]);
      for (int t = 1; t <= last; ++t)
        if (t != 2 * k - 1 && t != 2 * k) sub.push_back(xs[xpos(t)]);
      int sign = ((big_n + k) % 2 == 0) ? 1 : -1;
      add_rho_term(sign, xs[xpos(2 * k - 1)], xs[xpos(2 * k)], sub);
    }

    // Double sum with the inserted bracket; alpha on every survivor.
    for (int k = 1; k <= big_n; ++k) {
      int sign = ((big_n + k + 1) % 2 == 0) ? 1 : -1;
      for (int j = 2 * k + 1; j <= last; ++j) {
        dense.clear();
        if (!odd) dense.push_back(acol[xs[0]]);
        for (int t = 1; t <= last; ++t) {
          if (t == 2 * k - 1 || t == 2 * k) continue;
          if (t == j)
            dense.push_back(alg.bracket().bracket_basis(xs[xpos(2 * k - 1)],
                                                        xs[xpos(2 * k)], xs[xpos(j)]));
          else
            dense.push_back(acol[xs[t == 0 ? 0 : xpos(t)]]);
        }
        Vec fv = f.eval(dense);
        if (vec_is_zero(fv)) continue;
        if (sign > 0)
          val = vec_add(val, fv);
        else
          val = vec_sub(val, fv);
      }
    }

    for (int v = 0; v < m; ++v) out.coeff(flat, v) = val[v];
  }
  return out;
}

Rat one_cocycle_residual(const Matrix& f, const Representation& rep, const HomTriAlgebra& alg) {
  int n = alg.dim();
  if (f.cols() != n || f.rows() != rep.v_dim())
    throw Error("cocycle candidate shape mismatch");
  Rat res(0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec lhs = f.apply(alg.bracket().bracket_basis(x, y, z));
        Vec rhs = rep.rho_basis(x, y).apply(f.col(z));
        rhs = vec_add(rhs, rep.rho_basis(y, z).apply(f.col(x)));
        rhs = vec_add(rhs, rep.rho_basis(z, x).apply(f.col(y)));
        Rat d = vec_max_abs(vec_sub(lhs, rhs));
        if (d > res) res = d;
      }
  return res;
}

Rat coboundary_square_residual(const HomTriAlgebra& alg, const Representation& rep,
                               const Cochain& f) {
  return coboundary(alg, rep, coboundary(alg, rep, f)).max_abs();
}

}  // namespace trihom
