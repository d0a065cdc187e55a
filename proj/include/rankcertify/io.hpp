#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rankcertify/affine.hpp"
#include "rankcertify/problems.hpp"
#include "rankcertify/solvers.hpp"
#include "rankcertify/stationarity.hpp"

namespace rankcertify::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError with "line L, column C".
Json parse_json(std::string_view text, std::string_view source = "input");
Json read_json_file(const std::filesystem::path& path);

/// {"rows": m, "cols": n, "data": [[...], ...]} with row-major data.
Json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"constraints": [{"A": <matrix>, "b": <real>}, ...]}. An empty list needs
/// explicit "rows" and "cols".
Json affine_to_json(const AffineSet& S);
AffineSet affine_from_json(const Json& j);

/// {"type": "hankel" | "lrr" | "quadratic" | "diagonal", "params": {...}, "rank": r}.
///   hankel:    {"H": <matrix>} or {"signal": [...], "rows": m}
///   lrr:       {"B": [<matrix>, ...]} or {"N": N} for B^i = I
///   quadratic: {"Q": <mn x mn matrix over column-major vec(X)>, "C": <matrix>,
///               "constraints": [...]} (constraints optional)
///   diagonal:  {"a": [[...], ...], "b": [...], "Q": <matrix>, "c": [...]}
Problem problem_from_json(const Json& j);

/// Reads either a bare matrix or {"point": <matrix>}.
Matrix point_from_json(const Json& j);

ALMParams alm_params_from_json(const Json& j, ALMParams base = {});

/// Stable field order. +inf is written as null.
Json qualification_to_json(const QualificationReport& q);
QualificationReport qualification_from_json(const Json& j);
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

std::string certificate_text(const Certificate& c);

Json trace_summary_to_json(const SolveTrace& t);

}  // namespace rankcertify::io
