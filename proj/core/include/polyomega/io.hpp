#pragma once

#include "polyomega/cone.hpp"
#include "polyomega/elimination.hpp"

#include <string>

namespace polyomega {

/// Reads a system, one constraint per line: d integers, `>=` or `=`, right-hand side.
/// `#` starts a comment, blank lines are skipped, d comes from the first constraint.
/// Throws ParseError (with line number) or DimensionError.
LDSystem parse_system(const std::string &text);

/// Inverse of parse_system up to whitespace and comments.
std::string format_system(const LDSystem &system);

/// {"dimension": d, "cones": [{"mult", "generators", "apex", "open"}, ...]}.
/// Generators are listed column by column in canonical order.
std::string cones_to_json(const ConeCombination &combination, std::size_t dimension);

/// Inverse of cones_to_json. Throws ParseError or DimensionError.
ConeCombination cones_from_json(const std::string &text, std::size_t *dimension = nullptr);

} // namespace polyomega
