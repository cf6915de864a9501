#include "staircase/search.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "staircase/errors.hpp"
#include "staircase/io.hpp"

namespace staircase {

namespace {

std::string join_values(const auto& values, char sep) {
    std::ostringstream out;
    bool first = true;
    for (const auto& v : values) {
        if (!first) {
            out << sep;
        }
        first = false;
        out << v;
    }
    return out.str();
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next == std::string_view::npos ? next : next - pos));
        if (next == std::string_view::npos) {
            return parts;
        }
        pos = next + 1;
    }
}

}  // namespace

std::vector<Exponent> parse_value_spec(std::string_view text) {
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        auto lo = io::parse_exponent_list(text.substr(0, dots));
        auto hi = io::parse_exponent_list(text.substr(dots + 2));
        if (lo.size() != 1 || hi.size() != 1) {
            throw ParseError("range must look like lo..hi, got \"" + std::string(text) + '"');
        }
        if (hi[0] >= lo[0] && hi[0] - lo[0] > 1'000'000) {
            throw ParseError("range \"" + std::string(text) + "\" is too long");
        }
        std::vector<Exponent> out;
        for (Exponent v = lo[0]; v <= hi[0]; ++v) {
            out.push_back(v);
        }
        return out;
    }
    auto values = io::parse_exponent_list(text);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

SearchGrid parse_grid(std::string_view m_spec, std::string_view a_spec) {
    SearchGrid grid;
    for (Exponent m : parse_value_spec(m_spec)) {
        grid.ms.push_back(static_cast<std::size_t>(m));
    }
    for (auto part : split(a_spec, '/')) {
        grid.a_choices.push_back(parse_value_spec(part));
    }
    return grid;
}

SearchResult run_search(const SearchGrid& grid, unsigned kmax, PRule rule) {
    if (kmax < 2) {
        throw std::invalid_argument("search: kmax must be >= 2");
    }
    // Every candidate tuple in enumeration order; a tuple rejected before it
    // is evaluated carries its reason instead of parameters.
    struct Candidate {
        std::optional<FamilyParams> params;
        std::string note;
    };
    std::vector<Candidate> candidates;
    for (std::size_t m : grid.ms) {
        if (m < 1) {
            candidates.push_back({std::nullopt, "skip m=0: m must be >= 1"});
            continue;
        }
        const std::size_t positions = m - 1;
        std::vector<const std::vector<Exponent>*> choices;
        if (grid.a_choices.size() == 1) {
            choices.assign(positions, &grid.a_choices.front());
        } else if (grid.a_choices.size() == positions) {
            for (const auto& c : grid.a_choices) {
                choices.push_back(&c);
            }
        } else {
            candidates.push_back({std::nullopt, "skip m=" + std::to_string(m) + ": a spec has " +
                                                    std::to_string(grid.a_choices.size()) +
                                                    " positions, need " +
                                                    std::to_string(positions)});
            continue;
        }
        if (std::any_of(choices.begin(), choices.end(), [](auto* c) { return c->empty(); })) {
            continue;
        }
        std::vector<std::size_t> odometer(positions, 0);
        while (true) {
            std::vector<Exponent> a;
            for (std::size_t i = 0; i < positions; ++i) {
                a.push_back((*choices[i])[odometer[i]]);
            }
            std::string label = "m=" + std::to_string(m) + " a=[" + join_values(a, ',') + "]";
            try {
                FamilyParams params = params_from_a(std::move(a), rule);
                validate(params);
                candidates.push_back({std::move(params), label});
            } catch (const Error& e) {
                candidates.push_back({std::nullopt, "skip " + label + ": " + e.what()});
            }
            std::size_t i = positions;
            while (i > 0 && ++odometer[i - 1] == choices[i - 1]->size()) {
                odometer[i - 1] = 0;
                --i;
            }
            if (i == 0) {
                break;
            }
        }
    }

    // Evaluate in parallel, one strided slice of candidates per worker.
    std::vector<std::optional<SearchRow>> rows(candidates.size());
    std::vector<std::string> errors(candidates.size());
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                       candidates.size()));
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < candidates.size(); i += workers) {
                if (!candidates[i].params) {
                    continue;
                }
                try {
                    SearchRow row;
                    row.params = *candidates[i].params;
                    row.mus = mu_sequence(build_family(row.params), kmax);
                    row.signs = difference_signs(row.mus);
                    rows[i] = std::move(row);
                } catch (const ExponentOverflow& e) {
                    errors[i] = "skip " + candidates[i].note + ": " + e.what();
                }
            }
        }));
    }
    for (auto& t : tasks) {
        t.get();
    }

    SearchResult result;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (rows[i]) {
            result.rows.push_back(std::move(*rows[i]));
        } else if (!candidates[i].params) {
            result.skipped.push_back(candidates[i].note);
        } else {
            result.skipped.push_back(errors[i]);
        }
    }
    return result;
}

std::string to_csv_row(const SearchRow& row) {
    return std::to_string(row.params.m) + ',' + join_values(row.params.p, ';') + ',' +
           join_values(row.params.a, ';') + ',' + to_string(row.signs) + ',' +
           join_values(row.mus, ';');
}

}  // namespace staircase
