#pragma once

// JSON and CSV encodings shared by the library and the command-line tool.
//
//   ideal        [[a, b], ...] in canonical order
//   slice        {"d": int, "xexps": [int, ...]}
//   params       {"m": int, "p": [int, ...], "a": [int, ...]}
//   mu reports   JSON array of objects, or CSV with kMuReportCsvHeader

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "staircase/family.hpp"
#include "staircase/grading.hpp"
#include "staircase/ideal.hpp"

namespace staircase::io {

using nlohmann::json;

inline constexpr std::string_view kMuReportCsvHeader =
    "k,mu_computed,mu_predicted,structure_ok,cm_type,degree";

json to_json(const Monomial& m);
json to_json(const StaircaseIdeal& ideal);
json to_json(const GradedSlice& slice);
json to_json(const FamilyParams& params);
json to_json(const MuReport& report);
json to_json(const std::vector<MuReport>& reports);

struct ParsedIdeal {
    StaircaseIdeal ideal;
    /// True when the input list was not already the canonical generator list.
    bool canonicalized = false;
};

/// Accepts any list of [a, b] pairs; throws ParseError on malformed input.
ParsedIdeal parse_ideal(const json& doc);

/// Like parse_ideal, but also accepts an object carrying the ideal under
/// "ideal" (the shape `construct` and `power` emit).
ParsedIdeal parse_ideal_document(std::string_view text);

FamilyParams parse_params(const json& doc);
FamilyParams parse_params_text(std::string_view text);
GradedSlice parse_slice(const json& doc);

/// Compact canonical form, e.g. [[0,6],[2,3],[5,0]].
std::string format_ideal(const StaircaseIdeal& ideal);

std::string to_csv(const std::vector<MuReport>& reports);

/// Comma-separated unsigned integers, e.g. "72,18,12,8,2". Throws ParseError.
std::vector<Exponent> parse_exponent_list(std::string_view text);

}  // namespace staircase::io
