#pragma once

#include "catdias/report.hpp"
#include "catdias/support.hpp"

#include <json.hpp>
#include <string>

namespace catdias {

// Support file format, one record per line:
//
//   axes 6:op 6:plain
//   points 21
//   1 1
//   2 1
//   ...
//
// Points are 1-based and written in canonical (lexicographic) order. Blank
// lines and lines starting with '#' are ignored on input.
std::string write_support(const Support& s);
// Throws ParseError carrying the 1-based line number.
Support read_support(const std::string& text);

nlohmann::ordered_json to_json(const Report& report, bool with_timing = true);
nlohmann::ordered_json to_json(const Support& s);

} // namespace catdias
