#include "staircase/io.hpp"

#include <charconv>
#include <sstream>

#include "staircase/errors.hpp"

namespace staircase::io {

namespace {

Exponent as_exponent(const json& value, std::string_view what) {
    if (!value.is_number_unsigned()) {
        throw ParseError(std::string(what) + " must be a nonnegative integer, got " +
                         value.dump());
    }
    auto e = value.get<Exponent>();
    if (e > exponent_ceiling()) {
        throw ExponentOverflow(std::string(what) + " " + std::to_string(e) +
                               " exceeds exponent ceiling " +
                               std::to_string(exponent_ceiling()));
    }
    return e;
}

std::vector<Exponent> as_exponent_array(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw ParseError(std::string("params: \"") + key + "\" must be an array");
    }
    std::vector<Exponent> out;
    for (const auto& v : doc[key]) {
        out.push_back(as_exponent(v, key));
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

json to_json(const Monomial& m) { return json::array({m.a, m.b}); }

json to_json(const StaircaseIdeal& ideal) {
    json out = json::array();
    for (const auto& g : ideal.gens()) {
        out.push_back(to_json(g));
    }
    return out;
}

json to_json(const GradedSlice& slice) {
    return json{{"d", slice.degree}, {"xexps", slice.xexps}};
}

json to_json(const FamilyParams& params) {
    return json{{"m", params.m}, {"p", params.p}, {"a", params.a}};
}

json to_json(const MuReport& r) {
    return json{{"k", r.k},
                {"mu_computed", r.mu_computed},
                {"mu_predicted", r.mu_predicted},
                {"structure_ok", r.structure_ok},
                {"cm_type", r.cm_type},
                {"degree", r.degree}};
}

json to_json(const std::vector<MuReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) {
        out.push_back(to_json(r));
    }
    return out;
}

ParsedIdeal parse_ideal(const json& doc) {
    if (!doc.is_array()) {
        throw ParseError("ideal must be a JSON array of [a, b] pairs");
    }
    std::vector<Monomial> gens;
    gens.reserve(doc.size());
    for (const auto& pair : doc) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("ideal entry must be a pair [a, b], got " + pair.dump());
        }
        gens.push_back({as_exponent(pair[0], "exponent"), as_exponent(pair[1], "exponent")});
    }
    const bool already = is_canonical(gens);
    return {normalize(std::move(gens)), !already};
}

ParsedIdeal parse_ideal_document(std::string_view text) {
    json doc = parse_json(text);
    if (doc.is_object()) {
        if (!doc.contains("ideal")) {
            throw ParseError("object input needs an \"ideal\" member");
        }
        return parse_ideal(doc["ideal"]);
    }
    return parse_ideal(doc);
}

FamilyParams parse_params(const json& doc) {
    if (!doc.is_object()) {
        throw ParseError("params must be a JSON object");
    }
    if (!doc.contains("m") || !doc["m"].is_number_unsigned()) {
        throw ParseError("params: \"m\" must be a positive integer");
    }
    FamilyParams params;
    params.m = doc["m"].get<std::size_t>();
    params.p = as_exponent_array(doc, "p");
    params.a = doc.contains("a") ? as_exponent_array(doc, "a") : std::vector<Exponent>{};
    return params;
}

FamilyParams parse_params_text(std::string_view text) { return parse_params(parse_json(text)); }

GradedSlice parse_slice(const json& doc) {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("xexps") ||
        !doc["xexps"].is_array()) {
        throw ParseError("slice must look like {\"d\": int, \"xexps\": [...]}");
    }
    GradedSlice slice;
    slice.degree = as_exponent(doc["d"], "d");
    for (const auto& v : doc["xexps"]) {
        slice.xexps.push_back(as_exponent(v, "xexps entry"));
    }
    return slice;
}

std::string format_ideal(const StaircaseIdeal& ideal) { return to_json(ideal).dump(); }

std::string to_csv(const std::vector<MuReport>& reports) {
    std::ostringstream out;
    out << kMuReportCsvHeader << '\n';
    for (const auto& r : reports) {
        out << r.k << ',' << r.mu_computed << ',' << r.mu_predicted << ','
            << (r.structure_ok ? "true" : "false") << ',' << r.cm_type << ',' << r.degree
            << '\n';
    }
    return out.str();
}

std::vector<Exponent> parse_exponent_list(std::string_view text) {
    std::vector<Exponent> out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos);
        Exponent value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError("expected a nonnegative integer, got \"" + std::string(item) + '"');
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace staircase::io
