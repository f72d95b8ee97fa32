#pragma once

#include <json.hpp>

#include <string>

#include "trihom/bialgebra.hpp"

namespace trihom::io {

/// Output JSON preserves insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Parsed algebra document: dimension, structure constants given on
/// strictly increasing triples, an optional twist matrix (identity when
/// absent) and an optional complex flag enabling Gaussian-rational
/// literals ("a+bi").
struct AlgebraDocument {
  int dim = 0;
  bool complex_mode = false;
  TriBracket bracket = TriBracket::zero(1);
  Matrix alpha;

  HomTriAlgebra algebra() const { return HomTriAlgebra(bracket, alpha); }
};

AlgebraDocument algebra_from_json(const Json& j);
AlgebraDocument load_algebra(const std::string& path);
Json algebra_to_json(const TriBracket& bracket, const Matrix& alpha, bool complex_mode);

/// r-matrix document {dim, entries, complex?}.
Matrix rmatrix_from_json(const Json& j);
Matrix load_rmatrix(const std::string& path);
Json rmatrix_to_json(const Matrix& r, bool complex_mode = false);

/// Twist-map document {matrix, complex?}.
Matrix alpha_from_json(const Json& j);
Matrix load_alpha(const std::string& path);

Json matrix_to_json(const Matrix& m, bool complex_mode = false);
Matrix matrix_from_json(const Json& j, bool complex_mode, const std::string& context);

Json cobracket_to_json(const CoBracket& d, bool complex_mode = false);
CoBracket cobracket_from_json(const Json& j, int dim, bool complex_mode = false);

Json report_to_json(const Report& report);

/// Aligned check/residual/result table for the human-readable channel.
std::string report_table(const Report& report);

Json parse_file(const std::string& path);
void write_output(const Json& doc, const std::string& out_path);

}  // namespace trihom::io
