#pragma once

// JSON and CSV forms of polynomials, G-space elements, matroids and
// labeled matrices. Rationals serialize as strings "p" or "p/q".

#include <json.hpp>

#include <string>

#include "gtutte/bipoly.hpp"
#include "gtutte/ginv.hpp"
#include "gtutte/linbases.hpp"
#include "gtutte/matroid.hpp"

namespace gtutte {

using Json = nlohmann::json;

/// [[i, j, "c"], ...] sorted by (j, -i).
Json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);

/// {"n": n, "r": r, "coeffs": {"<bits>": "c", ...}}
Json to_json(const GInv& v);
GInv ginv_from_json(const Json& j);

/// {"n": n, "r": r, "bases": [[1, 2], ...]}, elements 1-indexed.
Json to_json(const BasisListMatroid& m);
/// Throws std::invalid_argument on malformed input or a list that violates
/// the exchange axiom.
BasisListMatroid matroid_from_json(const Json& j);

/// {"rows": [...], "columns": [...], "entries": [["c", ...], ...]}
Json to_json(const LabeledMatrix& m);
/// Header "monomial,<col>,...", then one line per row: label then entries.
std::string to_csv(const LabeledMatrix& m);
LabeledMatrix labeled_matrix_from_csv(const std::string& text);

Json rat_to_json(const Rat& q);
/// Accepts a string "p" / "p/q" or a JSON integer.
Rat rat_from_json(const Json& j);

std::string read_file(const std::string& path);

}  // namespace gtutte
