#pragma once

#include <string>

#include <json.hpp>

#include "framecover/cff.hpp"
#include "framecover/code.hpp"
#include "framecover/cover.hpp"
#include "framecover/graph.hpp"
#include "framecover/hadamard.hpp"

namespace framecover::io {

using nlohmann::json;

/// Whole file as a string; ParameterError if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

// Text matrices: a header line "rows cols", then one line of '0'/'1' per row.
// Codes use "t v"; cover-free families "t n". Trailing blank lines are ignored.

BinaryCode parse_code(const std::string& text);
std::string format_code(const BinaryCode& code);
CoverFreeFamily parse_cff(const std::string& text);
std::string format_cff(const CoverFreeFamily& f);

/// Rows of '+' / '-' characters; the row count is the order.
SignMatrix parse_sign_matrix(const std::string& text);
std::string format_sign_matrix(const SignMatrix& h);

/// Parses JSON, reporting syntax errors as ParseError with line and column.
json parse_json(const std::string& text);

json family_to_json(const FamilyTag& tag);
FamilyTag family_from_json(const json& j);

/// {"family": {...}, "vertices": [ids], "edges": [[u, v], ...]}. Lists may be
/// omitted for generated families; when present they must match.
json graph_to_json(const LabeledGraph& g, bool explicit_lists = true);
LabeledGraph graph_from_json(const json& j);

/// {"graph": family, "d": int, "bicliques": [...]}. Ground pairs are written
/// as {"A": [...], "B": [...], "r": r} with 1-based elements. Explicit
/// bicliques are {"X": [[...]], "Y": [[...]]}: each vertex is its element list
/// for Kneser and intersection targets (X holding the w-side for the latter)
/// and the one-element list [id] otherwise.
json cover_to_json(const BicliqueCover& cover);
BicliqueCover cover_from_json(const json& j);

}  // namespace framecover::io
