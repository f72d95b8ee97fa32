#include "trihom/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace trihom {

Matrix SkewParametrization::assemble(std::span<const Scalar> params) const {
  if (static_cast<int>(params.size()) != param_count())
    throw Error("parameter count does not match the subspace dimension");
  Matrix r(dim, dim);
  for (std::size_t s = 0; s < basis.size(); ++s)
    if (!params[s].is_zero()) r = r + params[s] * basis[s];
  return r;
}

SkewParametrization skew_parametrization(int dim) {
  SkewParametrization out;
  out.dim = dim;
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) {
      Matrix b(dim, dim);
      b.at(p, q) = Scalar(1);
      b.at(q, p) = Scalar(-1);
      out.basis.push_back(std::move(b));
    }
  return out;
}

SkewParametrization invariant_skew_subspace(const Matrix& alpha) {
  if (alpha.rows() != alpha.cols()) throw Error("twist map must be square");
  int n = alpha.rows();
  SkewParametrization full = skew_parametrization(n);
  int d_full = full.param_count();
  // Invariance operator alpha E alpha^T - E in skew coordinates.
  Matrix op(d_full, d_full);
  for (int c = 0; c < d_full; ++c) {
    Matrix image = alpha * full.basis[c] * alpha.transpose() - full.basis[c];
    int row = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) op.at(row++, c) = image.at(p, q);
  }
  SkewParametrization out;
  out.dim = n;
  for (const Vec& coords : nullspace(op)) {
    Matrix b(n, n);
    for (int s = 0; s < d_full; ++s)
      if (!coords[s].is_zero()) b = b + coords[s] * full.basis[s];
    out.basis.push_back(std::move(b));
  }
  return out;
}

void Poly::add_term(const std::vector<int>& exps, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Poly::eval(std::span<const Scalar> point) const {
  Scalar acc;
  for (const auto& [exps, coeff] : terms_) {
    Scalar term = coeff;
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < exps[v]; ++e) term *= point[v];
    acc += term;
  }
  return acc;
}

double Poly::eval_double(std::span<const double> point) const {
  double acc = 0.0;
  for (const auto& [exps, coeff] : terms_) {
    double term = coeff.to_double();
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < exps[v]; ++e) term *= point[v];
    acc += term;
  }
  return acc;
}

Rat ResidualPolynomialSystem::eval_max_abs(std::span<const Scalar> point) const {
  Rat res(0);
  for (const auto& [idx, poly] : polys) {
    Rat a = poly.eval(point).magnitude();
    if (a > res) res = a;
  }
  return res;
}

double ResidualPolynomialSystem::sos(std::span<const double> point) const {
  double acc = 0.0;
  for (const auto& [idx, poly] : polys) {
    double v = poly.eval_double(point);
    acc += v * v;
  }
  return acc;
}

double ResidualPolynomialSystem::residual_norm(std::span<const double> point) const {
  return std::sqrt(sos(point));
}

std::vector<double> ResidualPolynomialSystem::sos_gradient(std::span<const double> point) const {
  std::vector<double> grad(nvars, 0.0);
  for (const auto& [idx, poly] : polys) {
    double v = poly.eval_double(point);
    if (v == 0.0) continue;
    for (const auto& [exps, coeff] : poly.terms()) {
      // d/dt_s of the monomial, accumulated into 2 * p * dp.
      for (int s = 0; s < nvars; ++s) {
        if (exps[s] == 0) continue;
        double term = coeff.to_double() * exps[s];
        for (int v2 = 0; v2 < nvars; ++v2) {
          int e = exps[v2] - (v2 == s ? 1 : 0);
          for (int rep = 0; rep < e; ++rep) term *= point[v2];
        }
        grad[s] += 2.0 * v * term;
      }
    }
  }
  return grad;
}

ResidualPolynomialSystem residual_polynomials(const HomTriAlgebra& alg,
                                              const SkewParametrization& param) {
  int d = param.param_count();
  int n = alg.dim();
  std::size_t out_size = static_cast<std::size_t>(n) * n * n * n;
  std::vector<Poly> dense(out_size, Poly(d));
  for (int s1 = 0; s1 < d; ++s1)
    for (int s2 = 0; s2 < d; ++s2)
      for (int s3 = 0; s3 < d; ++s3) {
        Tensor w = chybe_trilinear(param.basis[s1], param.basis[s2], param.basis[s3], alg);
        if (w.is_zero()) continue;
        std::vector<int> exps(d, 0);
        ++exps[s1];
        ++exps[s2];
        ++exps[s3];
        for (std::size_t flat = 0; flat < w.size(); ++flat)
          if (!w[flat].is_zero()) dense[flat].add_term(exps, w[flat]);
      }
  ResidualPolynomialSystem sys;
  sys.nvars = d;
  sys.dim = n;
  for (std::size_t flat = 0; flat < out_size; ++flat)
    if (!dense[flat].is_zero()) sys.polys.emplace_back(flat, std::move(dense[flat]));

  // Cross-validate against the direct bracket at pseudorandom rational
  // points; a mismatch means the extraction itself is broken.
  std::mt19937_64 rng(0x5eedULL);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Scalar> point(d);
    for (int s = 0; s < d; ++s) {
      long num = static_cast<long>(rng() % 9) - 4;
      long den = static_cast<long>(rng() % 3) + 1;
      point[s] = Scalar(Rat(num, den));
    }
    Tensor direct = chybe_bracket(param.assemble(point), alg);
    for (const auto& [flat, poly] : sys.polys)
      if (poly.eval(point) != direct[flat])
        throw std::logic_error("polynomial system diverged from the bracket evaluation");
    for (std::size_t flat = 0; flat < out_size; ++flat) {
      bool tracked = false;
      for (const auto& [f2, p2] : sys.polys)
        if (f2 == flat) {
          tracked = true;
          break;
        }
      if (!tracked && !direct[flat].is_zero())
        throw std::logic_error("polynomial system dropped a nonzero bracket entry");
    }
  }
  return sys;
}

namespace {

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::vector<double>> minimize_residual(const ResidualPolynomialSystem& sys,
                                                   const SolverConfig& config) {
  if (sys.nvars < 1) throw Error("minimisation needs at least one parameter");
  std::mt19937_64 rng(config.seed);
  std::vector<std::vector<double>> hits;
  for (int restart = 0; restart < config.restarts; ++restart) {
    std::vector<double> t(sys.nvars);
    for (double& c : t) c = (2.0 * uniform_unit(rng) - 1.0) * config.box;
    double f = sys.sos(t);
    double step = 0.1;
    for (int iter = 0; iter < config.max_iters && f > 0.0; ++iter) {
      std::vector<double> g = sys.sos_gradient(t);
      double gnorm2 = 0.0;
      for (double c : g) gnorm2 += c * c;
      if (gnorm2 < 1e-300) break;
      bool moved = false;
      for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<double> cand(t);
        for (int s = 0; s < sys.nvars; ++s) cand[s] -= step * g[s];
        double fc = sys.sos(cand);
        if (fc < f) {
          t = std::move(cand);
          f = fc;
          step *= 1.5;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    if (std::sqrt(f) < config.tol) hits.push_back(std::move(t));
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::vector<double>> unique;
  for (const auto& h : hits) {
    bool close = false;
    for (const auto& u : unique) {
      double dist2 = 0.0;
      for (int s = 0; s < sys.nvars; ++s) dist2 += (h[s] - u[s]) * (h[s] - u[s]);
      if (dist2 < 1e-12) {
        close = true;
        break;
      }
    }
    if (!close) unique.push_back(h);
  }
  return unique;
}

Rat rationalize(double x, unsigned long max_denominator) {
  if (max_denominator < 1) throw Error("max denominator must be >= 1");
  bool negative = x < 0;
  double v = std::fabs(x);
  // Continued fraction convergents h/k, stopping before k exceeds the cap.
  unsigned long h_prev = 1, k_prev = 0;
  unsigned long h = static_cast<unsigned long>(std::floor(v)), k = 1;
  double frac = v - std::floor(v);
  for (int depth = 0; depth < 64 && frac > 1e-15; ++depth) {
    double inv = 1.0 / frac;
    double a_floor = std::floor(inv);
    if (a_floor > 1e18) break;
    unsigned long a = static_cast<unsigned long>(a_floor);
    unsigned long h_next = a * h + h_prev;
    unsigned long k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = inv - a_floor;
  }
  Rat r(static_cast<long>(h), static_cast<long>(k));
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

RationalizeResult rationalize_and_verify(const HomTriAlgebra& alg,
                                         const SkewParametrization& param,
                                         std::span<const double> point,
                                         unsigned long max_denominator) {
  RationalizeResult out;
  out.params.reserve(point.size());
  for (double c : point) out.params.emplace_back(rationalize(c, max_denominator));
  out.r = param.assemble(out.params);
  out.residual = chybe_bracket(out.r, alg).max_abs();
  out.verified = sgn(out.residual) == 0;
  return out;
}

}  // namespace trihom
