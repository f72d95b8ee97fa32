#include "trihom/samples.hpp"

namespace trihom::samples {

TriBracket dim3_bracket() {
  BracketGenerator g{1, 2, 3, basis_vec(3, 0)};
  return TriBracket::from_generators(3, std::span<const BracketGenerator>(&g, 1));
}

TriBracket dim4_bracket() {
  BracketGenerator g{1, 2, 3, basis_vec(4, 0)};
  return TriBracket::from_generators(4, std::span<const BracketGenerator>(&g, 1));
}

TriBracket nambu4_bracket() {
  std::vector<BracketGenerator> gens = {
      {1, 2, 3, basis_vec(4, 3)},                    // eps_{1234} = +1
      {1, 2, 4, vec_scale(Scalar(-1), basis_vec(4, 2))},  // eps_{1243} = -1
      {1, 3, 4, basis_vec(4, 1)},                    // eps_{1342} = +1
      {2, 3, 4, vec_scale(Scalar(-1), basis_vec(4, 0))},  // eps_{2341} = -1
  };
  return TriBracket::from_generators(4, gens);
}

TriBracket abelian_bracket(int dim) { return TriBracket::zero(dim); }

Ex31Params Ex31Params::defaults() {
  Ex31Params p;
  p.a11 = Scalar(1);
  p.a12 = Scalar(0);
  p.a13 = Scalar(0);
  p.a22 = Scalar(1);
  p.a23 = Scalar(0);
  p.a32 = Scalar(0);
  p.a33 = Scalar(1);
  p.r12 = Scalar(0);
  p.r13 = Scalar(0);
  p.r23 = Scalar(1);
  return p;
}

Matrix ex31_alpha(const Ex31Params& p) {
  Matrix a(3, 3);
  a.at(0, 0) = p.a11;
  a.at(0, 1) = p.a12;
  a.at(0, 2) = p.a13;
  a.at(1, 1) = p.a22;
  a.at(1, 2) = p.a23;
  a.at(2, 1) = p.a32;
  a.at(2, 2) = p.a33;
  return a;
}

Matrix ex31_r(const Ex31Params& p) {
  Matrix r(3, 3);
  r.at(0, 1) = p.r12;
  r.at(1, 0) = -p.r12;
  r.at(0, 2) = p.r13;
  r.at(2, 0) = -p.r13;
  r.at(1, 2) = p.r23;
  r.at(2, 1) = -p.r23;
  return r;
}

std::array<Scalar, 3> ex31_constraint_residuals(const Ex31Params& p) {
  Scalar c1 = p.a22 * p.a33 - p.a23 * p.a32 - Scalar(1);
  Scalar u = p.r12 * p.a11 - p.r23 * p.a13;
  Scalar v = p.r13 * p.a11 + p.r23 * p.a12;
  Scalar c2 = u * p.a22 + v * p.a23 - p.r12;
  Scalar c3 = u * p.a32 + v * p.a33 - p.r13;
  return {c1, c2, c3};
}

Ex32Params Ex32Params::defaults() {
  Ex32Params p;
  p.a11 = Scalar(1);
  p.a12 = Scalar(0);
  p.a13 = Scalar(2);
  p.a22 = Scalar(2);
  p.a23 = Scalar(3);
  return p;
}

Matrix ex32_alpha(const Ex32Params& p) {
  Matrix a(4, 4);
  a.at(0, 0) = p.a11;
  a.at(0, 1) = p.a12;
  a.at(0, 2) = p.a13;
  a.at(1, 1) = p.a22;
  a.at(1, 2) = p.a23;
  a.at(2, 1) = Scalar(1);
  a.at(2, 2) = Scalar(2);
  a.at(3, 1) = Scalar(1);
  a.at(3, 2) = Scalar(2);
  return a;
}

Matrix ex32_r() {
  // All upper entries 1 except the (3,4) component, which cancels.
  Matrix r(4, 4);
  int upper[][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (auto [p, q] : upper) {
    r.at(p, q) = Scalar(1);
    r.at(q, p) = Scalar(-1);
  }
  return r;
}

std::array<Scalar, 3> ex32_constraint_residuals(const Ex32Params& p) {
  Scalar c1 = p.a11 * (p.a22 + p.a23) + p.a12 * p.a23 - p.a22 * p.a13 - Scalar(1);
  Scalar c2 = Scalar(3) * p.a11 + Scalar(2) * p.a12 - p.a13 - Scalar(1);
  Scalar c3 = Scalar(2) * p.a22 - p.a23 - Scalar(1);
  return {c1, c2, c3};
}

}  // namespace trihom::samples
