#include "trihom/ybe.hpp"

namespace trihom {

namespace {

Rat max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }

struct Leg {
  int a, b;
  Scalar w;
};

std::vector<Leg> nonzero_legs(const Matrix& r) {
  std::vector<Leg> legs;
  for (int a = 0; a < r.rows(); ++a)
    for (int b = 0; b < r.cols(); ++b)
      if (!r.at(a, b).is_zero()) legs.push_back({a, b, r.at(a, b)});
  return legs;
}

// Accumulate w * (bracket vector at slot `triple`, alpha columns at the
// three single slots) into out.
void scatter_term(Tensor& out, const Scalar& w, const Vec& bracket, int triple_slot,
                  const std::array<int, 3>& single_slots, const std::array<const Vec*, 3>& single_vecs) {
  int n = out.dim();
  std::array<int, 4> idx{};
  for (int t = 0; t < n; ++t) {
    if (bracket[t].is_zero()) continue;
    Scalar wt = w * bracket[t];
    idx[triple_slot] = t;
    for (int c1 = 0; c1 < n; ++c1) {
      const Scalar& v1 = (*single_vecs[0])[c1];
      if (v1.is_zero()) continue;
      Scalar w1 = wt * v1;
      idx[single_slots[0]] = c1;
      for (int c2 = 0; c2 < n; ++c2) {
        const Scalar& v2 = (*single_vecs[1])[c2];
        if (v2.is_zero()) continue;
        Scalar w2 = w1 * v2;
        idx[single_slots[1]] = c2;
        for (int c3 = 0; c3 < n; ++c3) {
          const Scalar& v3 = (*single_vecs[2])[c3];
          if (v3.is_zero()) continue;
          idx[single_slots[2]] = c3;
          out.at(idx) += w2 * v3;
        }
      }
    }
  }
}

}  // namespace

Rat skew_residual(const Matrix& r) { return (r + r.transpose()).max_abs(); }

Rat alpha_invariance_residual(const Matrix& r, const Matrix& alpha) {
  if (r.rows() != alpha.rows() || r.cols() != alpha.cols())
    throw Error("r-matrix and twist map dimension mismatch");
  return (alpha * r * alpha.transpose() - r).max_abs();
}

Tensor embedded_triple_bracket(const EmbeddedFactor& f1, const EmbeddedFactor& f2,
                               const EmbeddedFactor& f3, const HomTriAlgebra& alg) {
  const EmbeddedFactor* fs[3] = {&f1, &f2, &f3};
  int slots = f1.slots;
  int n = alg.dim();
  for (const EmbeddedFactor* f : fs) {
    if (f->slots != slots) throw Error("embedded factors must share a slot count");
    if (f->p < 1 || f->q < 1 || f->p > slots || f->q > slots || f->p == f->q)
      throw Error("embedded factor legs must occupy two distinct slots");
    if (f->r.rows() != n || f->r.cols() != n)
      throw Error("embedded factor dimension does not match the algebra");
  }
  std::vector<int> occupancy(slots + 1, 0);
  for (const EmbeddedFactor* f : fs) {
    ++occupancy[f->p];
    ++occupancy[f->q];
  }
  int triple = -1;
  for (int s = 1; s <= slots; ++s) {
    if (occupancy[s] == 3) {
      if (triple != -1) throw Error("embedded bracket needs exactly one triply occupied slot");
      triple = s;
    } else if (occupancy[s] != 1) {
      throw Error("embedded bracket slot occupancy must be one except a single triple slot");
    }
  }
  if (triple < 0) throw Error("embedded bracket needs a triply occupied slot");

  // For each factor: which leg index sits at the triple slot and where
  // the other leg goes.
  std::array<bool, 3> first_at_triple{};
  std::array<int, 3> other_slot{};
  for (int f = 0; f < 3; ++f) {
    first_at_triple[f] = (fs[f]->p == triple);
    other_slot[f] = first_at_triple[f] ? fs[f]->q : fs[f]->p;
  }

  std::vector<Vec> acol(n);
  for (int i = 0; i < n; ++i) acol[i] = alg.alpha().col(i);

  auto legs1 = nonzero_legs(fs[0]->r);
  auto legs2 = nonzero_legs(fs[1]->r);
  auto legs3 = nonzero_legs(fs[2]->r);

  Tensor out(n, slots);
  std::array<int, 3> singles = {other_slot[0] - 1, other_slot[1] - 1, other_slot[2] - 1};
  for (const Leg& l1 : legs1)
    for (const Leg& l2 : legs2)
      for (const Leg& l3 : legs3) {
        int t1 = first_at_triple[0] ? l1.a : l1.b;
        int t2 = first_at_triple[1] ? l2.a : l2.b;
        int t3 = first_at_triple[2] ? l3.a : l3.b;
        Vec bracket = alg.bracket().bracket_basis(t1, t2, t3);
        if (vec_is_zero(bracket)) continue;
        int o1 = first_at_triple[0] ? l1.b : l1.a;
        int o2 = first_at_triple[1] ? l2.b : l2.a;
        int o3 = first_at_triple[2] ? l3.b : l3.a;
        Scalar w = l1.w * l2.w * l3.w;
        scatter_term(out, w, bracket, triple - 1, singles, {&acol[o1], &acol[o2], &acol[o3]});
      }
  return out;
}

Tensor chybe_trilinear(const Matrix& r1, const Matrix& r2, const Matrix& r3,
                       const HomTriAlgebra& alg) {
  int n = alg.dim();
  std::vector<Vec> acol(n);
  for (int i = 0; i < n; ++i) acol[i] = alg.alpha().col(i);
  auto legs1 = nonzero_legs(r1);
  auto legs2 = nonzero_legs(r2);
  auto legs3 = nonzero_legs(r3);
  Tensor out(n, 4);
  for (const Leg& li : legs1)
    for (const Leg& lj : legs2)
      for (const Leg& lk : legs3) {
        Scalar w = li.w * lj.w * lk.w;
        // slot layout per term: triple slot then alpha legs, see header
        scatter_term(out, w, alg.bracket().bracket_basis(li.a, lj.a, lk.a), 0, {1, 2, 3},
                     {&acol[li.b], &acol[lj.b], &acol[lk.b]});
        scatter_term(out, w, alg.bracket().bracket_basis(li.b, lj.a, lk.a), 1, {0, 2, 3},
                     {&acol[li.a], &acol[lj.b], &acol[lk.b]});
        scatter_term(out, w, alg.bracket().bracket_basis(li.b, lj.b, lk.a), 2, {0, 1, 3},
                     {&acol[li.a], &acol[lj.a], &acol[lk.b]});
        scatter_term(out, w, alg.bracket().bracket_basis(li.b, lj.b, lk.b), 3, {0, 1, 2},
                     {&acol[li.a], &acol[lj.a], &acol[lk.a]});
      }
  return out;
}

Tensor chybe_bracket_expanded(const Matrix& r, const HomTriAlgebra& alg) {
  return chybe_trilinear(r, r, r, alg);
}

Tensor chybe_bracket(const Matrix& r, const HomTriAlgebra& alg) {
  Tensor via_factors = embedded_triple_bracket(embed(r, 1, 2), embed(r, 1, 3), embed(r, 1, 4), alg);
  via_factors += embedded_triple_bracket(embed(r, 1, 2), embed(r, 2, 3), embed(r, 2, 4), alg);
  via_factors += embedded_triple_bracket(embed(r, 1, 3), embed(r, 2, 3), embed(r, 3, 4), alg);
  via_factors += embedded_triple_bracket(embed(r, 1, 4), embed(r, 2, 4), embed(r, 3, 4), alg);
  if (via_factors != chybe_bracket_expanded(r, alg))
    throw std::logic_error("embedded-factor route diverged from the direct expansion");
  return via_factors;
}

std::array<Tensor, 3> variant_brackets(const Matrix& r, const HomTriAlgebra& alg) {
  auto term = [&](int p1, int q1, int p2, int q2, int p3, int q3) {
    return embedded_triple_bracket(embed(r, p1, q1), embed(r, p2, q2), embed(r, p3, q3), alg);
  };
  // The fourth summand enters with a plus: that is the sign the identity
  // [[r,r,r]]_1 = [[r,r,r]] for skew r forces, and the one the assembly
  // of the compatibility condition derives term by term.
  Tensor v1 = term(1, 2, 1, 3, 1, 4) + term(1, 2, 2, 3, 2, 4) - term(1, 3, 3, 2, 3, 4) +
              term(1, 4, 4, 2, 4, 3);
  Tensor v2 = term(1, 2, 3, 1, 1, 4) - term(2, 1, 3, 2, 2, 4) - term(3, 1, 3, 2, 3, 4) -
              term(4, 1, 4, 2, 3, 4);
  Tensor v3 = -term(1, 2, 1, 3, 4, 1) + term(2, 1, 2, 3, 4, 2) - term(3, 1, 3, 2, 4, 3) -
              term(4, 1, 4, 2, 4, 3);
  return {v1, v2, v3};
}

Tensor compat_defect(const Matrix& r, const HomTriAlgebra& alg, int basis_index,
                     const std::array<Tensor, 3>& variants) {
  int n = alg.dim();
  Vec x = basis_vec(n, basis_index);

  Tensor acc(n, 5);
  // One summand: insert alpha(y) into the variant at `ins`, then apply
  // alpha everywhere except the adjoint action at slot `ad_slot`.
  auto add_term = [&](const Tensor& variant, const Vec& alpha_y, int ins, int ad_slot,
                      const Matrix& ad, const Scalar& w) {
    if (variant.is_zero()) return;
    Tensor five = insert_at(variant, alpha_y, ins);
    std::vector<Matrix> maps(5, alg.alpha());
    maps[ad_slot - 1] = ad;
    acc += w * apply_slot_maps(maps, five);
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& w = r.at(a, b);
      if (w.is_zero()) continue;
      Vec xi = basis_vec(n, a);
      Vec alpha_y = alg.alpha().col(b);
      Matrix ad_xi_x = ad1(alg, xi, x);
      Matrix ad_x_xi = Scalar(-1) * ad_xi_x;
      add_term(variants[0], alpha_y, 2, 1, ad_xi_x, w);
      add_term(variants[0], alpha_y, 1, 2, ad_x_xi, w);
      add_term(variants[1], alpha_y, 5, 3, ad_x_xi, w);
      add_term(variants[1], alpha_y, 4, 3, ad_xi_x, w);
      add_term(variants[1], alpha_y, 3, 4, ad_x_xi, w);
      add_term(variants[2], alpha_y, 5, 4, ad_xi_x, w);
      add_term(variants[2], alpha_y, 4, 5, ad_x_xi, w);
      add_term(variants[2], alpha_y, 3, 5, ad_xi_x, w);
    }
  return acc;
}

Rat compat_residual(const Matrix& r, const HomTriAlgebra& alg) {
  auto variants = variant_brackets(r, alg);
  Rat res(0);
  for (int i = 0; i < alg.dim(); ++i)
    res = max_rat(res, compat_defect(r, alg, i, variants).max_abs());
  return res;
}

Matrix twisted_r(const Matrix& r, const Matrix& alpha, int n) {
  if (n < 0) throw Error("twist power must be >= 0");
  Matrix an = matrix_power(alpha, n);
  return an * r * an.transpose();
}

}  // namespace trihom
