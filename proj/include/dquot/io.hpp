#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "dquot/algebra.hpp"
#include "dquot/bar.hpp"
#include "dquot/matfac.hpp"
#include "dquot/quiver.hpp"

namespace dquot::io {

using nlohmann::json;

/// "Q", "Fp:<p>" or {"Fp": p}. ParseError otherwise.
Field parse_field(const json& j);
Field parse_field(const std::string& text);
inline Field parse_field(const char* text) { return parse_field(std::string(text)); }
json field_to_json(const Field& f);

/// Parses JSON text; ParseError on malformed input.
json parse_json(const std::string& text, const std::string& origin = "input");
std::string read_file(const std::string& path);

/// { "field": ..., "basis": [labels], "unit": [coords], "mul": [[[coords]]] };
/// coordinates are integers or rational strings such as "1/2".
FinDimAlgebra algebra_from_json(const json& j, std::optional<Field> field = std::nullopt);
json algebra_to_json(const FinDimAlgebra& a);

/// { "vertices": n, "arrows": [{"name", "from", "to"}], "relations": [...],
/// "degree_bound": 12 } with 1-based vertices.
QuiverPresentation quiver_from_json(const json& j);

/// { "variables": [...], "sigma": "...", "phi": [[...]], "psi": [[...]] } with an
/// optional "target" factorization { "phi", "psi" } and optional "field".
struct MFInput {
  Potential sigma;
  MatrixFactorization source;
  std::optional<MatrixFactorization> target;
};
MFInput mf_from_json(const json& j, std::optional<Field> field = std::nullopt);

/// Differentials of a bar truncation as [{ "degree": -n, "matrix": rows }], each
/// matrix mapping B^{-n} to B^{-n+1} in the column convention.
json complex_to_json(const BarTruncation& bar);

std::string scalar_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

}  // namespace dquot::io
