#pragma once

// Sign-pattern search over a grid of family parameters.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/family.hpp"

namespace staircase {

/// Grid of m values and a-value choices. `a_choices` holds either one list
/// shared by every position a_2..a_m, or one list per position.
struct SearchGrid {
    std::vector<std::size_t> ms;
    std::vector<std::vector<Exponent>> a_choices;
};

/// "2..8", "2,3,5" or "7". Throws ParseError.
std::vector<Exponent> parse_value_spec(std::string_view text);

/// m spec as above; a spec is a value spec, or per-position value specs
/// joined by '/', e.g. "3/5/8/35".
SearchGrid parse_grid(std::string_view m_spec, std::string_view a_spec);

struct SearchRow {
    FamilyParams params;
    std::vector<Sign> signs;
    std::vector<std::size_t> mus;
};

inline constexpr std::string_view kSearchCsvHeader = "m,p,a,sign_pattern,mu_sequence";

struct SearchResult {
    std::vector<SearchRow> rows;      // enumeration order
    std::vector<std::string> skipped;  // one message per rejected tuple
};

/// Enumerates m ascending, then a-tuples lexicographically. Tuples whose
/// parameters are invalid are skipped and described in `skipped`. Tuples are
/// evaluated concurrently; the result order never depends on scheduling.
SearchResult run_search(const SearchGrid& grid, unsigned kmax, PRule rule = PRule::product);

std::string to_csv_row(const SearchRow& row);

}  // namespace staircase
