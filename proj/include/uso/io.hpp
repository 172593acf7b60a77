#pragma once

#include <string>

#include <json.hpp>

#include "uso/constructions.hpp"
#include "uso/cube.hpp"
#include "uso/matrix.hpp"

namespace uso {

// File schemas (all JSON):
//   orientation  { "n": int, "out": [int x 2^n] }
//   matrix       { "n": int, "entries": [["p/q", ...], ...] }
//   vector       { "n": int, "entries": ["p/q", ...] }
//   beta         { "n": int, "beta": [[i, j, "p/q"], ...] }   (missing pairs = 0)
//   monotone fn  { "k": int, "table": [0/1 x 2^k] }
//   antichain    { "k": int, "members": ["bitstring", ...] }
// Rational entries accept plain JSON integers as shorthand.

nlohmann::json orientation_to_json(const Orientation& phi);
Orientation orientation_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const RationalMatrix& M);
RationalMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const nlohmann::json& j);

BetaAssignment beta_from_json(const nlohmann::json& j);
MonotoneFunction monotone_from_json(const nlohmann::json& j);
MonotoneFunction antichain_from_json(const nlohmann::json& j);

// Graphviz digraph: one node per vertex labelled by its bit string, one
// directed edge per cube edge.
std::string orientation_to_dot(const Orientation& phi);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace uso
