#include "trihom/io.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "trihom/version.hpp"

namespace trihom::io {

namespace {

const Json& require(const Json& j, const std::string& field, const std::string& context) {
  auto it = j.find(field);
  if (it == j.end()) throw ParseError(context + ": missing field '" + field + "'");
  return *it;
}

int require_int(const Json& j, const std::string& field, const std::string& context) {
  const Json& v = require(j, field, context);
  if (!v.is_number_integer())
    throw ParseError(context + ": field '" + field + "' must be an integer");
  return v.get<int>();
}

bool optional_bool(const Json& j, const std::string& field, bool fallback) {
  auto it = j.find(field);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError("field '" + field + "' must be a boolean");
  return it->get<bool>();
}

Scalar scalar_at(const Json& v, bool complex_mode, const std::string& context) {
  if (!v.is_string())
    throw ParseError(context + ": expected a rational string, got " + v.dump());
  try {
    return scalar_parse(v.get<std::string>(), complex_mode);
  } catch (const ParseError& e) {
    throw ParseError(context + ": " + e.what());
  }
}

}  // namespace

Matrix matrix_from_json(const Json& j, bool complex_mode, const std::string& context) {
  if (!j.is_array() || j.empty())
    throw ParseError(context + ": expected a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  Matrix m;
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    std::string row_ctx = context + "[" + std::to_string(r) + "]";
    if (!row.is_array()) throw ParseError(row_ctx + ": expected an array");
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      m = Matrix(rows, cols);
    }
    if (static_cast<int>(row.size()) != cols)
      throw ParseError(row_ctx + ": ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = scalar_at(row[c], complex_mode, row_ctx + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json matrix_to_json(const Matrix& m, bool complex_mode) {
  (void)complex_mode;
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

AlgebraDocument algebra_from_json(const Json& j) {
  AlgebraDocument doc;
  doc.dim = require_int(j, "dim", "algebra document");
  if (doc.dim < 1) throw ParseError("algebra document: dim must be >= 1");
  doc.complex_mode = optional_bool(j, "complex", false);

  const Json& bracket = require(j, "bracket", "algebra document");
  if (!bracket.is_array()) throw ParseError("bracket: expected an array of generators");
  std::vector<BracketGenerator> gens;
  for (std::size_t g = 0; g < bracket.size(); ++g) {
    std::string ctx = "bracket[" + std::to_string(g) + "]";
    const Json& entry = bracket[g];
    if (!entry.is_object()) throw ParseError(ctx + ": expected an object");
    BracketGenerator gen;
    gen.i = require_int(entry, "i", ctx);
    gen.j = require_int(entry, "j", ctx);
    gen.k = require_int(entry, "k", ctx);
    const Json& value = require(entry, "value", ctx);
    if (!value.is_array() || static_cast<int>(value.size()) != doc.dim)
      throw ParseError(ctx + ": value must be an array of dim rational strings");
    gen.value.resize(doc.dim);
    for (int l = 0; l < doc.dim; ++l)
      gen.value[l] =
          scalar_at(value[l], doc.complex_mode, ctx + ".value[" + std::to_string(l) + "]");
    gens.push_back(std::move(gen));
  }
  try {
    doc.bracket = TriBracket::from_generators(doc.dim, gens);
  } catch (const Error& e) {
    throw ParseError(std::string("bracket: ") + e.what());
  }

  if (auto it = j.find("alpha"); it != j.end()) {
    doc.alpha = matrix_from_json(*it, doc.complex_mode, "alpha");
    if (doc.alpha.rows() != doc.dim || doc.alpha.cols() != doc.dim)
      throw ParseError("alpha: expected a dim x dim matrix");
  } else {
    doc.alpha = Matrix::identity(doc.dim);
  }
  return doc;
}

Json algebra_to_json(const TriBracket& bracket, const Matrix& alpha, bool complex_mode) {
  Json doc;
  doc["dim"] = bracket.dim();
  if (complex_mode) doc["complex"] = true;
  Json gens = Json::array();
  int n = bracket.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec v = bracket.bracket_basis(i, j, k);
        if (vec_is_zero(v)) continue;
        Json gen;
        gen["i"] = i + 1;
        gen["j"] = j + 1;
        gen["k"] = k + 1;
        Json value = Json::array();
        for (const Scalar& s : v) value.push_back(scalar_to_string(s));
        gen["value"] = std::move(value);
        gens.push_back(std::move(gen));
      }
  doc["bracket"] = std::move(gens);
  doc["alpha"] = matrix_to_json(alpha, complex_mode);
  return doc;
}

AlgebraDocument load_algebra(const std::string& path) {
  return algebra_from_json(parse_file(path));
}

Matrix rmatrix_from_json(const Json& j) {
  int dim = require_int(j, "dim", "r-matrix document");
  bool complex_mode = optional_bool(j, "complex", false);
  Matrix m = matrix_from_json(require(j, "entries", "r-matrix document"), complex_mode,
                              "entries");
  if (m.rows() != dim || m.cols() != dim)
    throw ParseError("r-matrix document: entries must be a dim x dim matrix");
  return m;
}

Matrix load_rmatrix(const std::string& path) { return rmatrix_from_json(parse_file(path)); }

Json rmatrix_to_json(const Matrix& r, bool complex_mode) {
  Json doc;
  doc["dim"] = r.rows();
  if (complex_mode) doc["complex"] = true;
  doc["entries"] = matrix_to_json(r, complex_mode);
  return doc;
}

Matrix alpha_from_json(const Json& j) {
  bool complex_mode = optional_bool(j, "complex", false);
  return matrix_from_json(require(j, "matrix", "twist document"), complex_mode, "matrix");
}

Matrix load_alpha(const std::string& path) { return alpha_from_json(parse_file(path)); }

Json cobracket_to_json(const CoBracket& d, bool complex_mode) {
  (void)complex_mode;
  Json out = Json::array();
  for (int i = 0; i < d.dim(); ++i) {
    const Tensor& t = d.of_basis(i);
    Json terms = Json::array();
    std::vector<int> idx(3);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      if (t[flat].is_zero()) continue;
      t.decode(flat, idx);
      Json term;
      term["slots"] = Json::array({idx[0] + 1, idx[1] + 1, idx[2] + 1});
      term["value"] = scalar_to_string(t[flat]);
      terms.push_back(std::move(term));
    }
    Json entry;
    entry["basis"] = i + 1;
    entry["terms"] = std::move(terms);
    out.push_back(std::move(entry));
  }
  return out;
}

CoBracket cobracket_from_json(const Json& j, int dim, bool complex_mode) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("cobracket: expected one entry per basis vector");
  std::vector<Tensor> images(dim, Tensor(dim, 3));
  for (const Json& entry : j) {
    int basis = require_int(entry, "basis", "cobracket entry");
    if (basis < 1 || basis > dim) throw ParseError("cobracket: basis index out of range");
    const Json& terms = require(entry, "terms", "cobracket entry");
    for (const Json& term : terms) {
      const Json& slots = require(term, "slots", "cobracket term");
      if (!slots.is_array() || slots.size() != 3)
        throw ParseError("cobracket term: slots must have three entries");
      std::array<int, 3> idx{};
      for (int s = 0; s < 3; ++s) {
        idx[s] = slots[s].get<int>() - 1;
        if (idx[s] < 0 || idx[s] >= dim)
          throw ParseError("cobracket term: slot index out of range");
      }
      images[basis - 1].at(idx) =
          scalar_at(require(term, "value", "cobracket term"), complex_mode, "cobracket term");
    }
  }
  return CoBracket(std::move(images));
}

Json report_to_json(const Report& report) {
  Json doc;
  doc["tool_version"] = kToolVersion;
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    if (c.exact())
      entry["residual"] = rat_to_string(std::get<Rat>(c.residual));
    else
      entry["residual"] = std::get<double>(c.residual);
    entry["pass"] = c.pass;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  doc["overall"] = report.overall();
  return doc;
}

std::string report_table(const Report& report) {
  std::size_t width = 4;
  for (const Check& c : report.checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  for (const Check& c : report.checks) {
    std::string residual;
    if (c.exact()) {
      residual = rat_to_string(std::get<Rat>(c.residual));
    } else {
      std::ostringstream tmp;
      tmp << std::setprecision(6) << std::get<double>(c.residual);
      residual = tmp.str();
    }
    out << std::left << std::setw(static_cast<int>(width) + 2) << c.name
        << std::setw(22) << residual << (c.pass ? "pass" : "FAIL") << "\n";
  }
  out << "overall: " << (report.overall() ? "pass" : "FAIL") << "\n";
  return out.str();
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_output(const Json& doc, const std::string& out_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
  }
}

}  // namespace trihom::io
