#include <CLI11.hpp>

#include <iostream>

#include "trihom/io.hpp"
#include "trihom/samples.hpp"
#include "trihom/solver.hpp"
#include "trihom/version.hpp"

namespace {

using trihom::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct OutputOptions {
  std::string out_path;
  bool json_only = false;
};

int emit(const trihom::Report& report, Json payload, const OutputOptions& opts) {
  Json doc = trihom::io::report_to_json(report);
  for (auto& [key, value] : payload.items()) doc[key] = value;
  trihom::io::write_output(doc, opts.out_path);
  if (!opts.json_only) std::cerr << trihom::io::report_table(report);
  return report.overall() ? kExitPass : kExitCheckFailed;
}

int cmd_check_algebra(const std::string& file, const OutputOptions& opts) {
  trihom::io::AlgebraDocument doc = trihom::io::load_algebra(file);
  trihom::HomTriAlgebra alg = doc.algebra();
  trihom::Report report;
  report.add_exact("bracket skew-symmetry", trihom::skew_residual(doc.bracket));
  report.add_exact("hom-jacobi identity", trihom::hom_jacobi_residual(alg));
  report.add_exact("multiplicativity", trihom::multiplicative_residual(alg));
  return emit(report, Json::object(), opts);
}

int cmd_chybe(const std::string& file, const std::string& rfile, const OutputOptions& opts) {
  trihom::io::AlgebraDocument doc = trihom::io::load_algebra(file);
  trihom::Matrix r = trihom::io::load_rmatrix(rfile);
  if (r.rows() != doc.dim)
    throw trihom::ParseError("r-matrix dimension does not match the algebra");
  trihom::HomTriAlgebra alg = doc.algebra();
  trihom::Report report;
  report.add_exact("r skew-symmetry", trihom::skew_residual(r));
  report.add_exact("r alpha-invariance", trihom::alpha_invariance_residual(r, doc.alpha));
  report.add_exact("chybe residual", trihom::chybe_bracket(r, alg).max_abs());
  auto variants = trihom::variant_brackets(r, alg);
  for (int m = 0; m < 3; ++m)
    report.add_exact("variant bracket " + std::to_string(m + 1), variants[m].max_abs());
  report.add_exact("compatibility condition", trihom::compat_residual(r, alg));
  return emit(report, Json::object(), opts);
}

int cmd_bialgebra(const std::string& file, const std::string& rfile, const OutputOptions& opts) {
  trihom::io::AlgebraDocument doc = trihom::io::load_algebra(file);
  trihom::Matrix r = trihom::io::load_rmatrix(rfile);
  if (r.rows() != doc.dim)
    throw trihom::ParseError("r-matrix dimension does not match the algebra");
  trihom::LocalCocycleBialgebra bi = trihom::assemble_coboundary(doc.algebra(), r);
  Json payload;
  payload["delta1"] = trihom::io::cobracket_to_json(bi.components.d1, doc.complex_mode);
  payload["delta2"] = trihom::io::cobracket_to_json(bi.components.d2, doc.complex_mode);
  payload["delta3"] = trihom::io::cobracket_to_json(bi.components.d3, doc.complex_mode);
  payload["delta"] = trihom::io::cobracket_to_json(bi.co.cobracket, doc.complex_mode);
  return emit(bi.report, std::move(payload), opts);
}

int cmd_twist(const std::string& file, const std::string& alphafile, const std::string& rfile,
              int power, const OutputOptions& opts) {
  trihom::io::AlgebraDocument doc = trihom::io::load_algebra(file);
  if (doc.alpha != trihom::Matrix::identity(doc.dim))
    throw trihom::ParseError("twist expects an untwisted input algebra (alpha = identity)");
  trihom::Matrix phi = trihom::io::load_alpha(alphafile);
  if (phi.rows() != doc.dim || phi.cols() != doc.dim)
    throw trihom::ParseError("twist map dimension does not match the algebra");

  trihom::HomTriAlgebra untwisted(doc.bracket, trihom::Matrix::identity(doc.dim));
  trihom::Report report;
  report.add_exact("input skew-symmetry", trihom::skew_residual(doc.bracket));
  report.add_exact("input jacobi identity", trihom::hom_jacobi_residual(untwisted));
  report.add_exact("morphism residual", trihom::morphism_residual(doc.bracket, phi));

  Json payload;
  if (report.overall()) {
    trihom::HomTriAlgebra twisted = trihom::twist(doc.bracket, phi);
    report.add_exact("twisted hom-jacobi identity", trihom::hom_jacobi_residual(twisted));
    report.add_exact("twisted multiplicativity", trihom::multiplicative_residual(twisted));
    payload["algebra"] =
        trihom::io::algebra_to_json(twisted.bracket(), twisted.alpha(), doc.complex_mode);
    if (!rfile.empty()) {
      trihom::Matrix r = trihom::io::load_rmatrix(rfile);
      if (r.rows() != doc.dim)
        throw trihom::ParseError("r-matrix dimension does not match the algebra");
      for (int m = 0; m <= power; ++m) {
        trihom::Matrix rm = trihom::twisted_r(r, phi, m);
        report.add_exact("twisted chybe (power " + std::to_string(m) + ")",
                         trihom::chybe_bracket(rm, twisted).max_abs());
      }
    }
  }
  return emit(report, std::move(payload), opts);
}

int cmd_solve(const std::string& file, const std::string& alphafile,
              const trihom::SolverConfig& config, const OutputOptions& opts) {
  trihom::io::AlgebraDocument doc = trihom::io::load_algebra(file);
  trihom::Matrix alpha = alphafile.empty() ? doc.alpha : trihom::io::load_alpha(alphafile);
  if (alpha.rows() != doc.dim || alpha.cols() != doc.dim)
    throw trihom::ParseError("twist map dimension does not match the algebra");
  trihom::HomTriAlgebra alg(doc.bracket, alpha);

  trihom::Report report;
  trihom::SkewParametrization param = trihom::invariant_skew_subspace(alpha);
  report.add_numeric("invariant skew subspace dimension",
                     static_cast<double>(param.param_count()), true);

  Json payload;
  Json basis = Json::array();
  for (const trihom::Matrix& b : param.basis)
    basis.push_back(trihom::io::matrix_to_json(b, doc.complex_mode));
  payload["subspace_basis"] = std::move(basis);

  Json solutions = Json::array();
  if (param.param_count() > 0) {
    trihom::ResidualPolynomialSystem sys = trihom::residual_polynomials(alg, param);
    auto candidates = trihom::minimize_residual(sys, config);
    int verified = 0;
    for (const auto& point : candidates) {
      trihom::RationalizeResult result =
          trihom::rationalize_and_verify(alg, param, point, config.max_denominator);
      if (!result.verified) continue;
      ++verified;
      report.add_exact("solution " + std::to_string(verified) + " chybe residual",
                       result.residual);
      Json sol;
      Json params = Json::array();
      for (const trihom::Scalar& c : result.params)
        params.push_back(trihom::scalar_to_string(c));
      sol["params"] = std::move(params);
      sol["entries"] = trihom::io::matrix_to_json(result.r, doc.complex_mode);
      solutions.push_back(std::move(sol));
    }
    if (verified == 0) report.add_exact("no verified solutions", trihom::Rat(0));
  } else {
    report.add_exact("no verified solutions", trihom::Rat(0));
  }
  payload["solutions"] = std::move(solutions);
  return emit(report, std::move(payload), opts);
}

trihom::Scalar param_or(const Json& params, const std::string& name,
                        const trihom::Scalar& fallback, bool complex_mode) {
  auto it = params.find(name);
  if (it == params.end()) return fallback;
  if (!it->is_string())
    throw trihom::ParseError("params: field '" + name + "' must be a rational string");
  return trihom::scalar_parse(it->get<std::string>(), complex_mode);
}

// (alpha o [.,.,.], alpha) without the morphism precondition, so broken
// parameter choices still produce a full report instead of an error.
trihom::HomTriAlgebra twisted_unchecked(const trihom::TriBracket& bracket,
                                        const trihom::Matrix& alpha) {
  int n = bracket.dim();
  std::vector<trihom::Scalar> c(static_cast<std::size_t>(n) * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        trihom::Vec img = alpha.apply(bracket.bracket_basis(i, j, k));
        for (int l = 0; l < n; ++l)
          c[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = img[l];
      }
  return trihom::HomTriAlgebra(trihom::TriBracket::from_dense(n, std::move(c)), alpha);
}

int cmd_verify_example(const std::string& which, const std::string& params_path,
                       const OutputOptions& opts) {
  Json params = Json::object();
  if (!params_path.empty()) params = trihom::io::parse_file(params_path);

  trihom::Report report;
  if (which == "ex31") {
    trihom::samples::Ex31Params p = trihom::samples::Ex31Params::defaults();
    p.a11 = param_or(params, "a11", p.a11, true);
    p.a12 = param_or(params, "a12", p.a12, true);
    p.a13 = param_or(params, "a13", p.a13, true);
    p.a22 = param_or(params, "a22", p.a22, true);
    p.a23 = param_or(params, "a23", p.a23, true);
    p.a32 = param_or(params, "a32", p.a32, true);
    p.a33 = param_or(params, "a33", p.a33, true);
    p.r12 = param_or(params, "r12", p.r12, true);
    p.r13 = param_or(params, "r13", p.r13, true);
    p.r23 = param_or(params, "r23", p.r23, true);

    trihom::TriBracket bracket = trihom::samples::dim3_bracket();
    trihom::Matrix alpha = trihom::samples::ex31_alpha(p);
    trihom::Matrix r = trihom::samples::ex31_r(p);
    auto constraints = trihom::samples::ex31_constraint_residuals(p);
    for (int c = 0; c < 3; ++c)
      report.add_exact("parameter constraint " + std::to_string(c + 1),
                       constraints[c].magnitude());
    report.add_exact("alpha morphism residual", trihom::morphism_residual(bracket, alpha));
    report.add_exact("r alpha-invariance", trihom::alpha_invariance_residual(r, alpha));

    trihom::HomTriAlgebra twisted = twisted_unchecked(bracket, alpha);
    report.add_exact("chybe residual", trihom::chybe_bracket(r, twisted).max_abs());

    trihom::Rat delta_skew(0);
    trihom::DeltaComponents built =
        trihom::build_delta_components_unchecked(twisted, r, &delta_skew);
    report.add_exact("cobracket skew-symmetry", delta_skew);

    // Closed forms: delta_i(e_b) = sign * coeff_b * (r inserted-at-i a11 e1).
    trihom::Tensor r_tensor(3, 2);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        std::array<int, 2> idx{a, b};
        r_tensor.at(idx) = r.at(a, b);
      }
    trihom::Vec a11e1 = trihom::vec_scale(p.a11, trihom::basis_vec(3, 0));
    std::array<trihom::Scalar, 3> coeff = {p.r23, p.r13, p.r12};
    const trihom::CoBracket* comps[3] = {&built.d1, &built.d2, &built.d3};
    for (int i = 1; i <= 3; ++i)
      for (int b = 0; b < 3; ++b) {
        int sign = (b == 1) ? ((i % 2 == 0) ? -1 : 1) : ((i % 2 == 0) ? 1 : -1);
        trihom::Tensor expected =
            (trihom::Scalar(sign) * coeff[b]) * insert_at(r_tensor, a11e1, i);
        report.add_exact("delta" + std::to_string(i) + "(e" + std::to_string(b + 1) +
                             ") closed form",
                         (comps[i - 1]->of_basis(b) - expected).max_abs());
      }
    trihom::CoBracket delta = built.total();
    trihom::Tensor wedge = trihom::wedge3(trihom::basis_vec(3, 0), trihom::basis_vec(3, 1),
                                          trihom::basis_vec(3, 2));
    std::array<trihom::Scalar, 3> wcoeff = {-(p.r23 * p.r23 * p.a11),
                                            p.r13 * p.r23 * p.a11, -(p.r12 * p.r23 * p.a11)};
    for (int b = 0; b < 3; ++b)
      report.add_exact("delta(e" + std::to_string(b + 1) + ") closed form",
                       (delta.of_basis(b) - wcoeff[b] * wedge).max_abs());
  } else if (which == "ex32") {
    trihom::samples::Ex32Params p = trihom::samples::Ex32Params::defaults();
    p.a11 = param_or(params, "a11", p.a11, true);
    p.a12 = param_or(params, "a12", p.a12, true);
    p.a13 = param_or(params, "a13", p.a13, true);
    p.a22 = param_or(params, "a22", p.a22, true);
    p.a23 = param_or(params, "a23", p.a23, true);

    trihom::TriBracket bracket = trihom::samples::dim4_bracket();
    trihom::Matrix alpha = trihom::samples::ex32_alpha(p);
    trihom::Matrix r = trihom::samples::ex32_r();
    auto constraints = trihom::samples::ex32_constraint_residuals(p);
    for (int c = 0; c < 3; ++c)
      report.add_exact("parameter constraint " + std::to_string(c + 1),
                       constraints[c].magnitude());
    report.add_exact("alpha morphism residual", trihom::morphism_residual(bracket, alpha));
    report.add_exact("r alpha-invariance", trihom::alpha_invariance_residual(r, alpha));

    trihom::HomTriAlgebra twisted = twisted_unchecked(bracket, alpha);
    report.add_exact("chybe residual", trihom::chybe_bracket(r, twisted).max_abs());

    trihom::Rat delta_skew(0);
    trihom::DeltaComponents built =
        trihom::build_delta_components_unchecked(twisted, r, &delta_skew);
    report.add_exact("cobracket skew-symmetry", delta_skew);

    trihom::Tensor r_tensor(4, 2);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        std::array<int, 2> idx{a, b};
        r_tensor.at(idx) = r.at(a, b);
      }
    trihom::Vec a11e1 = trihom::vec_scale(p.a11, trihom::basis_vec(4, 0));
    const trihom::CoBracket* comps[3] = {&built.d1, &built.d2, &built.d3};
    for (int i = 1; i <= 3; ++i)
      for (int b = 0; b < 3; ++b) {
        int sign = (b == 1) ? ((i % 2 == 0) ? -1 : 1) : ((i % 2 == 0) ? 1 : -1);
        trihom::Tensor expected = trihom::Scalar(sign) * insert_at(r_tensor, a11e1, i);
        report.add_exact("delta" + std::to_string(i) + "(e" + std::to_string(b + 1) +
                             ") closed form",
                         (comps[i - 1]->of_basis(b) - expected).max_abs());
      }
    trihom::CoBracket delta = built.total();
    trihom::Tensor e123 = trihom::wedge3(trihom::basis_vec(4, 0), trihom::basis_vec(4, 1),
                                         trihom::basis_vec(4, 2));
    trihom::Tensor e124 = trihom::wedge3(trihom::basis_vec(4, 0), trihom::basis_vec(4, 1),
                                         trihom::basis_vec(4, 3));
    trihom::Tensor delta_e2_expected = p.a11 * (e123 + e124);
    report.add_exact("delta(e2) closed form",
                     (delta.of_basis(1) - delta_e2_expected).max_abs());
    report.add_exact("delta(e1) relation",
                     (delta.of_basis(0) + delta_e2_expected).max_abs());
    report.add_exact("delta(e3) relation",
                     (delta.of_basis(2) + delta_e2_expected).max_abs());
    report.add_exact("delta(e4) zero", delta.of_basis(3).max_abs());
  } else {
    throw trihom::ParseError("unknown example '" + which + "' (expected ex31 or ex32)");
  }
  return emit(report, Json::object(), opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of twisted ternary Lie bialgebras and the "
               "associated Yang-Baxter equation"};
  app.set_version_flag("--version", trihom::kToolVersion);
  app.require_subcommand(1);

  OutputOptions opts;
  app.add_option("--out", opts.out_path, "write the JSON report to a file instead of stdout");
  app.add_flag("--json-only", opts.json_only, "suppress the human-readable table on stderr");

  std::string file, rfile, alphafile, which, params_path;
  int power = 0;
  trihom::SolverConfig config;

  CLI::App* check = app.add_subcommand("check-algebra", "verify the defining identities");
  check->add_option("file", file, "algebra document")->required();

  CLI::App* chybe = app.add_subcommand("chybe", "evaluate the Yang-Baxter residuals");
  chybe->add_option("file", file, "algebra document")->required();
  chybe->add_option("rfile", rfile, "r-matrix document")->required();

  CLI::App* bialg = app.add_subcommand("bialgebra", "assemble and verify the induced bialgebra");
  bialg->add_option("file", file, "algebra document")->required();
  bialg->add_option("rfile", rfile, "r-matrix document")->required();

  CLI::App* twist_cmd = app.add_subcommand("twist", "twist an algebra by an endomorphism");
  twist_cmd->add_option("file", file, "untwisted algebra document")->required();
  twist_cmd->add_option("alphafile", alphafile, "endomorphism document")->required();
  twist_cmd->add_option("--r", rfile, "optional r-matrix to push through the twist");
  twist_cmd->add_option("--n", power, "verify twisted r-matrices up to this power");

  CLI::App* solve = app.add_subcommand("solve", "search for exact Yang-Baxter solutions");
  solve->add_option("file", file, "algebra document")->required();
  solve->add_option("--alpha", alphafile, "twist map document (defaults to the algebra's)");
  solve->add_option("--restarts", config.restarts, "random restarts");
  solve->add_option("--tol", config.tol, "float residual acceptance threshold");
  solve->add_option("--max-iters", config.max_iters, "descent iterations per restart");
  solve->add_option("--max-denominator", config.max_denominator,
                    "denominator cap for rationalization");
  solve->add_option("--seed", config.seed, "random seed");

  CLI::App* verify = app.add_subcommand("verify-example", "evaluate a bundled worked example");
  verify->add_option("which", which, "ex31 or ex32")->required();
  verify->add_option("--params", params_path, "JSON overrides for the example parameters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_algebra(file, opts);
    if (chybe->parsed()) return cmd_chybe(file, rfile, opts);
    if (bialg->parsed()) return cmd_bialgebra(file, rfile, opts);
    if (twist_cmd->parsed()) return cmd_twist(file, alphafile, rfile, power, opts);
    if (solve->parsed()) return cmd_solve(file, alphafile, config, opts);
    if (verify->parsed()) return cmd_verify_example(which, params_path, opts);
  } catch (const trihom::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const trihom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
