#pragma once
// JSON serialization for squares, outlines, violations, and verdicts, plus
// canonical dumping (sorted keys, two-space indent, trailing newline) so that
// identical objects always produce byte-identical files.

#include <string>

#include "json.hpp"

#include "ils/decide.hpp"
#include "ils/necessary.hpp"
#include "ils/oracle.hpp"
#include "ils/outline.hpp"

namespace ils {

// Thrown by the from_json parsers; the message names the offending field.
struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// {"grid": [[...]], "order": n} — symbols 1-based, 0 = empty cell.
nlohmann::json square_to_json(const Grid& grid);
Grid square_from_json(const nlohmann::json& j);

// {"counts": [[[...]]], "p": [...], "q": [...], "r": [...]} — counts[i][j][l].
nlohmann::json outline_to_json(const Outline& o);
Outline outline_from_json(const nlohmann::json& j);

// {"A": [...], "B": [...], "C": [...], "D": [...], "lhs": N, "rhs": N} —
// 1-based part indices, k+1 = slack.
nlohmann::json violation_to_json(const Violation& v);

// {"order": n, "parts": [...], "status": "exists|not_exists|unknown"} plus
// "witness" (square object) when Exists and "certificate" (violation object
// or citation string) when present.
nlohmann::json verdict_to_json(const ExistenceVerdict& v, const Parts& parts, int n);

// {"nodes": N, "status": ...} plus "witness" when found.
nlohmann::json oracle_to_json(const OracleResult& r);

// dump(indent=2) with sorted keys and a trailing newline.
std::string canonical_dump(const nlohmann::json& j);

// "3,2,1" -> {3,2,1}; throws JsonError naming the flag on malformed input.
Parts parse_parts(const std::string& csv, const std::string& flag_name);

}  // namespace ils
