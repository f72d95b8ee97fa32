#include "trihom/bialgebra.hpp"

namespace trihom {

namespace {

// Accumulate w * (bracket at `slot`, v1 and v2 at the other two slots,
// in increasing slot order) into an arity-3 tensor.
void scatter3(Tensor& out, const Scalar& w, const Vec& bracket, int slot, const Vec& v1,
              const Vec& v2) {
  int n = out.dim();
  std::array<int, 3> idx{};
  int s1 = slot == 0 ? 1 : 0;
  int s2 = slot == 2 ? 1 : 2;
  for (int t = 0; t < n; ++t) {
    if (bracket[t].is_zero()) continue;
    Scalar wt = w * bracket[t];
    idx[slot] = t;
    for (int c1 = 0; c1 < n; ++c1) {
      if (v1[c1].is_zero()) continue;
      Scalar w1 = wt * v1[c1];
      idx[s1] = c1;
      for (int c2 = 0; c2 < n; ++c2) {
        if (v2[c2].is_zero()) continue;
        idx[s2] = c2;
        out.at(idx) += w1 * v2[c2];
      }
    }
  }
}

}  // namespace

DeltaComponents build_delta_components_unchecked(const HomTriAlgebra& alg, const Matrix& r,
                                                 Rat* skew_residual_out) {
  int n = alg.dim();
  if (r.rows() != n || r.cols() != n)
    throw Error("r-matrix dimension does not match the algebra");
  std::vector<Vec> acol(n);
  for (int i = 0; i < n; ++i) acol[i] = alg.alpha().col(i);

  std::vector<Tensor> img1(n, Tensor(n, 3)), img2(n, Tensor(n, 3)), img3(n, Tensor(n, 3));
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (r.at(a, b).is_zero()) continue;
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (r.at(c, d).is_zero()) continue;
            Scalar w = r.at(a, b) * r.at(c, d);
            Vec br = alg.bracket().bracket_basis(x, a, c);
            if (vec_is_zero(br)) continue;
            // d1: bracket x a(y_j) x a(y_i); d2: a(y_i) x bracket x a(y_j);
            // d3: a(y_j) x a(y_i) x bracket.
            scatter3(img1[x], w, br, 0, acol[d], acol[b]);
            scatter3(img2[x], w, br, 1, acol[b], acol[d]);
            scatter3(img3[x], w, br, 2, acol[d], acol[b]);
          }
      }
  }
  DeltaComponents out{CoBracket(std::move(img1)), CoBracket(std::move(img2)),
                      CoBracket(std::move(img3))};
  if (skew_residual_out) *skew_residual_out = coskew_residual(out.total());
  return out;
}

DeltaComponents build_delta_components(const HomTriAlgebra& alg, const Matrix& r) {
  Rat skew(0);
  DeltaComponents out = build_delta_components_unchecked(alg, r, &skew);
  if (sgn(skew) != 0)
    throw Error("induced cobracket is not skew-symmetric (residual " + rat_to_string(skew) +
                ")");
  return out;
}

Report verify_local_cocycle(const HomTriAlgebra& alg, const DeltaComponents& delta) {
  Report report;
  const CoBracket* comps[3] = {&delta.d1, &delta.d2, &delta.d3};
  for (int s = 1; s <= 3; ++s) {
    Representation rep = local_rep(alg, s);
    int n = alg.dim();
    Matrix f(rep.v_dim(), n);
    for (int i = 0; i < n; ++i) {
      const Tensor& t = comps[s - 1]->of_basis(i);
      for (std::size_t flat = 0; flat < t.size(); ++flat)
        f.at(static_cast<int>(flat), i) = t[flat];
    }
    report.add_exact("local cocycle (slot " + std::to_string(s) + ")",
                     one_cocycle_residual(f, rep, alg));
  }
  return report;
}

LocalCocycleBialgebra assemble_coboundary(const HomTriAlgebra& alg, const Matrix& r) {
  Report report;
  report.add_exact("bracket skew-symmetry", skew_residual(alg.bracket()));
  report.add_exact("hom-jacobi identity", hom_jacobi_residual(alg));
  report.add_exact("multiplicativity", multiplicative_residual(alg));
  report.add_exact("r skew-symmetry", skew_residual(r));
  report.add_exact("r alpha-invariance", alpha_invariance_residual(r, alg.alpha()));
  report.add_exact("chybe residual", chybe_bracket(r, alg).max_abs());

  Rat delta_skew(0);
  DeltaComponents components = build_delta_components_unchecked(alg, r, &delta_skew);
  report.add_exact("cobracket skew-symmetry", delta_skew);

  HomTriCoalgebra co{components.total(), alg.alpha()};
  report.add_exact("comultiplicativity", comultiplicative_residual(co));
  report.add_exact("hom-co-jacobi identity", cojacobi_residual(co));
  report.append(verify_local_cocycle(alg, components));
  report.add_exact("compatibility condition", compat_residual(r, alg));

  return LocalCocycleBialgebra{alg, std::move(co), std::move(components), r, std::move(report)};
}

}  // namespace trihom
