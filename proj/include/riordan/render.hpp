#pragma once

#include <string>

#include "json.hpp"

#include "riordan/hopf.hpp"
#include "riordan/riordan_group.hpp"
#include "riordan/trimatrix.hpp"

namespace riordan {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(const std::string& name); // throws ValidationError

/// {"order": N, "coeffs": ["p/q", ...]} with exact fraction text.
nlohmann::json series_json(const RatSeries& f);

/// {"dim": d, "rows": [["1"], ["2", "1"], ...]}; only the triangle is emitted.
nlohmann::json matrix_json(const TriMatrix& m);

nlohmann::json pair_json(const RiordanPair& p);
nlohmann::json graded_poly_json(const GradedPoly& p);
nlohmann::json tensor_poly_json(const TensorPoly& t);

/// Space-separated coefficients on one line.
std::string series_table(const RatSeries& f);
/// Comma-separated coefficients on one line.
std::string series_csv(const RatSeries& f);

/// One row per line; table entries space-separated, CSV comma-separated.
/// Cells above the diagonal are omitted entirely.
std::string matrix_table(const TriMatrix& m);
std::string matrix_csv(const TriMatrix& m);

std::string render_series(const RatSeries& f, OutputFormat fmt);
std::string render_matrix(const TriMatrix& m, OutputFormat fmt);
std::string render_pair(const RiordanPair& p, OutputFormat fmt);
std::string render_graded_poly(const GradedPoly& p, OutputFormat fmt);
std::string render_tensor_poly(const TensorPoly& t, OutputFormat fmt);

} // namespace riordan
