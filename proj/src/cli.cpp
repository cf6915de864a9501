#include "staircase/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "staircase/errors.hpp"
#include "staircase/family.hpp"
#include "staircase/grading.hpp"
#include "staircase/io.hpp"
#include "staircase/oracle.hpp"
#include "staircase/search.hpp"

namespace staircase::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

struct Options {
    std::string m;
    std::string p;
    std::string a;
    std::string params_file;
    std::string ideal_file;
    unsigned choose_n = 0;
    unsigned k = 1;
    unsigned kmax = 0;
    Format format = Format::plain;
    std::string out_path;
    bool no_banner = false;
    std::uint64_t seed = 1;
    std::size_t count = 200;
    std::string p_rule = "product";
};

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path);
    if (!file) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

class Context {
public:
    Context(const Options& opt, CLI::App* sub, std::istream& in, std::ostream& err)
        : opt_(opt), sub_(sub), in_(in), err_(err) {}

    bool given(const char* flag) const { return sub_->count(flag) > 0; }

    bool has_family_source() const {
        return given("--m") || given("--p") || given("--a") || given("--params") ||
               given("--choose-n");
    }

    /// Exactly one of: inline flags, --params, --choose-n.
    FamilyParams params() const {
        const bool inline_flags = given("--m") || given("--p") || given("--a");
        const int sources = int(inline_flags) + int(given("--params")) + int(given("--choose-n"));
        if (sources != 1) {
            throw UsageError("give exactly one parameter source: --m/--p/--a, --params or --choose-n");
        }
        if (given("--choose-n")) {
            if (opt_.choose_n < 1) {
                throw UsageError("--choose-n must be >= 1");
            }
            return choose_parameters(opt_.choose_n);
        }
        if (given("--params")) {
            return io::parse_params_text(read_source(opt_.params_file, in_));
        }
        if (!given("--m") || !given("--p")) {
            throw UsageError("inline parameters need --m and --p (and --a when m > 1)");
        }
        FamilyParams params;
        auto m = io::parse_exponent_list(opt_.m);
        if (m.size() != 1) {
            throw ParseError("--m must be a single integer");
        }
        params.m = static_cast<std::size_t>(m[0]);
        params.p = io::parse_exponent_list(opt_.p);
        params.a = io::parse_exponent_list(opt_.a);
        return params;
    }

    /// --ideal, or the k-th power of the family ideal.
    StaircaseIdeal ideal_or_family_power(unsigned k) const {
        if (given("--ideal")) {
            if (has_family_source()) {
                throw UsageError("--ideal cannot be combined with family parameters");
            }
            auto parsed = io::parse_ideal_document(read_source(opt_.ideal_file, in_));
            if (parsed.canonicalized) {
                err_ << "note: input ideal was not in canonical form and was minimalized\n";
            }
            return k == 1 ? parsed.ideal : power(parsed.ideal, k);
        }
        return power(build_family(params()).ideal, k);
    }

private:
    const Options& opt_;
    CLI::App* sub_;
    std::istream& in_;
    std::ostream& err_;
};

std::string csv_quoted(const std::string& s) { return '"' + s + '"'; }

void print_table(std::ostream& out, const std::vector<MuReport>& reports) {
    out << std::setw(4) << "k" << std::setw(13) << "mu_computed" << std::setw(14)
        << "mu_predicted" << std::setw(14) << "structure_ok" << std::setw(9) << "cm_type"
        << std::setw(12) << "degree" << '\n';
    for (const auto& r : reports) {
        out << std::setw(4) << r.k << std::setw(13) << r.mu_computed << std::setw(14)
            << r.mu_predicted << std::setw(14) << (r.structure_ok ? "true" : "false")
            << std::setw(9) << r.cm_type << std::setw(12) << r.degree << '\n';
    }
}

std::string plain_params(const FamilyParams& params) {
    std::ostringstream s;
    s << "m=" << params.m << " p=" << json(params.p).dump() << " a=" << json(params.a).dump();
    return s.str();
}

int cmd_construct(const Context& ctx, Format format, std::ostream& out) {
    const Family family = build_family(ctx.params());
    const auto& comps = family.components;
    switch (format) {
        case Format::plain:
            out << plain_params(family.params) << '\n';
            for (std::size_t u = 1; u <= comps.size(); ++u) {
                out << "I_" << u << " mu=" << mu(comps[u - 1]) << " deg="
                    << deg_ideal(comps[u - 1]) << ' ' << io::format_ideal(comps[u - 1]) << '\n';
            }
            out << "I mu=" << mu(family.ideal) << " deg=" << deg_ideal(family.ideal) << ' '
                << io::format_ideal(family.ideal) << '\n';
            break;
        case Format::json: {
            json doc;
            doc["params"] = io::to_json(family.params);
            doc["components"] = json::array();
            doc["component_mu"] = json::array();
            doc["component_degree"] = json::array();
            for (const auto& c : comps) {
                doc["components"].push_back(io::to_json(c));
                doc["component_mu"].push_back(mu(c));
                doc["component_degree"].push_back(deg_ideal(c));
            }
            doc["ideal"] = io::to_json(family.ideal);
            doc["mu"] = mu(family.ideal);
            doc["degree"] = deg_ideal(family.ideal);
            out << doc.dump() << '\n';
            break;
        }
        case Format::csv:
            out << "name,mu,degree,generators\n";
            for (std::size_t u = 1; u <= comps.size(); ++u) {
                out << "I_" << u << ',' << mu(comps[u - 1]) << ',' << deg_ideal(comps[u - 1])
                    << ',' << csv_quoted(io::format_ideal(comps[u - 1])) << '\n';
            }
            out << "I," << mu(family.ideal) << ',' << deg_ideal(family.ideal) << ','
                << csv_quoted(io::format_ideal(family.ideal)) << '\n';
            break;
    }
    return kOk;
}

int cmd_power(const Context& ctx, const Options& opt, Format format, std::ostream& out) {
    const StaircaseIdeal ideal = ctx.ideal_or_family_power(opt.k);
    switch (format) {
        case Format::plain:
            out << "k=" << opt.k << " mu=" << mu(ideal);
            if (!ideal.is_zero()) {
                out << " deg=" << deg_ideal(ideal);
            }
            out << '\n' << io::format_ideal(ideal) << '\n';
            break;
        case Format::json: {
            json doc{{"k", opt.k}, {"mu", mu(ideal)}, {"ideal", io::to_json(ideal)}};
            if (!ideal.is_zero()) {
                doc["degree"] = deg_ideal(ideal);
            }
            out << doc.dump() << '\n';
            break;
        }
        case Format::csv:
            out << "a,b\n";
            for (const auto& g : ideal.gens()) {
                out << g.a << ',' << g.b << '\n';
            }
            break;
    }
    return kOk;
}

int cmd_mu(const Context& ctx, const Options& opt, Format format, std::ostream& out) {
    const std::size_t value = mu(ctx.ideal_or_family_power(opt.k));
    switch (format) {
        case Format::plain:
            out << value << '\n';
            break;
        case Format::json:
            out << json{{"k", opt.k}, {"mu", value}}.dump() << '\n';
            break;
        case Format::csv:
            out << "k,mu\n" << opt.k << ',' << value << '\n';
            break;
    }
    return kOk;
}

void emit_reports(std::ostream& out, Format format, const FamilyParams& params,
                  const std::vector<MuReport>& reports, const std::vector<std::string>& failures) {
    switch (format) {
        case Format::plain:
            out << plain_params(params) << '\n';
            print_table(out, reports);
            if (failures.empty()) {
                out << "consistent: yes\n";
            } else {
                out << "consistent: no\n";
                for (const auto& f : failures) {
                    out << "  " << f << '\n';
                }
            }
            break;
        case Format::json:
            out << json{{"params", io::to_json(params)},
                        {"reports", io::to_json(reports)},
                        {"ok", failures.empty()},
                        {"failures", failures}}
                       .dump()
                << '\n';
            break;
        case Format::csv:
            out << io::to_csv(reports);
            break;
    }
}

int cmd_table(const Context& ctx, const Options& opt, Format format, std::ostream& out,
              std::ostream& err) {
    const Family family = build_family(ctx.params());
    const unsigned kmax = opt.kmax > 0 ? opt.kmax : static_cast<unsigned>(family.params.m + 1);
    const auto reports = mu_table(family, kmax);
    const auto failures = table_failures(reports);
    emit_reports(out, format, family.params, reports, failures);
    for (const auto& f : failures) {
        err << "mismatch: " << f << '\n';
    }
    return failures.empty() ? kOk : kMismatch;
}

int cmd_verify(const Context& ctx, const Options& opt, Format format, std::ostream& out,
               std::ostream& err) {
    const FamilyParams params = ctx.params();
    const bool headline = ctx.given("--choose-n");
    const unsigned n = opt.choose_n;
    unsigned kmax = opt.kmax;
    if (kmax == 0) {
        kmax = headline ? n + 3 : static_cast<unsigned>(params.m + 1);
    }
    if (headline && kmax < n) {
        throw UsageError("--kmax must be at least --choose-n");
    }
    const auto reports = mu_table(build_family(params), kmax);
    const auto failures = headline ? headline_failures(n, reports) : table_failures(reports);
    emit_reports(out, format, params, reports, failures);
    for (const auto& f : failures) {
        err << "verification failed: " << f << '\n';
    }
    return failures.empty() ? kOk : kMismatch;
}

int cmd_socle(const Context& ctx, const Options& opt, Format format, std::ostream& out) {
    const StaircaseIdeal ideal = ctx.ideal_or_family_power(opt.k);
    const auto corners = socle_monomials(ideal);
    const auto via_colon = socle_via_colon(ideal);
    const bool identity_ok = corners.size() + 1 == mu(ideal);
    const bool colon_ok = corners == via_colon;

    json socle = json::array();
    for (const auto& m : corners) {
        socle.push_back(io::to_json(m));
    }
    switch (format) {
        case Format::plain:
            out << "mu=" << mu(ideal) << '\n'
                << "cm_type=" << corners.size() << '\n'
                << "socle=" << socle.dump() << '\n'
                << "type == mu - 1: " << (identity_ok ? "ok" : "FAILED") << '\n'
                << "corners == colon socle: " << (colon_ok ? "ok" : "FAILED") << '\n';
            break;
        case Format::json:
            out << json{{"mu", mu(ideal)},
                        {"cm_type", corners.size()},
                        {"socle", socle},
                        {"identity_ok", identity_ok},
                        {"colon_ok", colon_ok}}
                       .dump()
                << '\n';
            break;
        case Format::csv:
            out << "a,b\n";
            for (const auto& m : corners) {
                out << m.a << ',' << m.b << '\n';
            }
            break;
    }
    return identity_ok && colon_ok ? kOk : kMismatch;
}

int cmd_search(const Options& opt, Format format, std::ostream& out, std::ostream& err) {
    if (opt.m.empty() || opt.a.empty()) {
        throw UsageError("search needs --m and --a grid specs");
    }
    PRule rule = PRule::product;
    if (opt.p_rule == "minimal") {
        rule = PRule::minimal;
    } else if (opt.p_rule != "product") {
        throw UsageError("--p-rule must be product or minimal");
    }
    const unsigned kmax = opt.kmax > 0 ? opt.kmax : 3;
    const SearchResult result = run_search(parse_grid(opt.m, opt.a), kmax, rule);
    for (const auto& s : result.skipped) {
        err << s << '\n';
    }
    if (result.rows.empty()) {
        err << "no valid tuples\n";
        return kUsage;
    }
    if (format == Format::json) {
        json rows = json::array();
        for (const auto& r : result.rows) {
            rows.push_back({{"params", io::to_json(r.params)},
                            {"sign_pattern", to_string(r.signs)},
                            {"mu_sequence", r.mus}});
        }
        out << rows.dump() << '\n';
    } else {
        out << kSearchCsvHeader << '\n';
        for (const auto& r : result.rows) {
            out << to_csv_row(r) << '\n';
        }
    }
    return kOk;
}

// Fast path against the oracle on seeded random instances.
int cmd_selftest(const Options& opt, Format format, std::ostream& out, std::ostream& err) {
    std::size_t mismatches = 0;
    auto check = [&](bool ok, const std::string& what, std::uint64_t seed) {
        if (!ok) {
            ++mismatches;
            err << "mismatch: " << what << " (seed " << seed << ")\n";
        }
    };
    for (std::size_t i = 0; i < opt.count; ++i) {
        const std::uint64_t s = opt.seed * 1'000'003 + i;
        auto cands = oracle::random_monomials(s, 60, i % 2 == 0 ? 40 : 1'000'000);
        check(std::ranges::equal(normalize(cands).gens(), oracle::naive_minimalize(cands)),
              "normalize", s);

        auto lhs = oracle::random_ideal(2 * s, 30, 1'000'000, false);
        auto rhs = oracle::random_ideal(2 * s + 1, 30, 1'000'000, false);
        check(std::ranges::equal(product(lhs, rhs).gens(),
                                 oracle::naive_product(lhs.gens(), rhs.gens())),
              "product", s);

        auto small = oracle::random_ideal(3 * s, 10, 1'000'000, false);
        check(std::ranges::equal(power(small, 3).gens(), oracle::naive_power(small.gens(), 3)),
              "power", s);

        auto primary = oracle::random_ideal(5 * s, 12, 30, true);
        auto brute = oracle::naive_socle(primary.gens(), 31);
        check(socle_monomials(primary) == brute && socle_via_colon(primary) == brute,
              "socle", s);
    }
    if (format == Format::json) {
        out << json{{"cases", opt.count}, {"mismatches", mismatches}}.dump() << '\n';
    } else {
        out << "selftest: " << opt.count << " cases, " << mismatches << " mismatches\n";
    }
    return mismatches == 0 ? kOk : kMismatch;
}

std::optional<Exponent> ceiling_from_env() {
    const char* raw = std::getenv("STAIRCASE_MAX_EXP");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    auto values = io::parse_exponent_list(raw);
    if (values.size() != 1) {
        throw ParseError("STAIRCASE_MAX_EXP must be a single integer");
    }
    return values[0];
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    Options opt;
    CLI::App app{"Exact arithmetic on monomial ideals in K[x,y]", "staircase"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    const std::map<std::string, Format> formats{
        {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "plain, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", opt.out_path, "write output to this file");
        sub->add_flag("--no-banner", opt.no_banner, "omit the version banner in plain output");
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--m", opt.m, "number of components");
        sub->add_option("--p", opt.p, "p_1..p_m, comma separated");
        sub->add_option("--a", opt.a, "a_2..a_m, comma separated");
        sub->add_option("--params", opt.params_file, "FamilyParams JSON file");
        sub->add_option("--choose-n", opt.choose_n, "synthesize parameters for this n");
    };
    auto add_ideal = [&](CLI::App* sub) {
        sub->add_option("--ideal", opt.ideal_file, "ideal JSON file, or - for stdin");
        sub->add_option("--k", opt.k, "power to take")->check(CLI::PositiveNumber);
    };
    auto add_kmax = [&](CLI::App* sub) {
        sub->add_option("--kmax", opt.kmax, "largest power")->check(CLI::PositiveNumber);
    };

    auto* construct = app.add_subcommand("construct", "build I_1..I_m and I");
    add_family(construct);
    add_common(construct);

    auto* pow = app.add_subcommand("power", "print I^k");
    add_family(pow);
    add_ideal(pow);
    add_common(pow);

    auto* mu_cmd = app.add_subcommand("mu", "print mu(I^k)");
    add_family(mu_cmd);
    add_ideal(mu_cmd);
    add_common(mu_cmd);

    auto* table = app.add_subcommand("table", "computed vs predicted mu(I^k)");
    add_family(table);
    add_kmax(table);
    add_common(table);

    auto* verify = app.add_subcommand("verify", "check a family, or the headline claim for --choose-n");
    add_family(verify);
    add_kmax(verify);
    add_common(verify);

    auto* socle = app.add_subcommand("socle", "socle monomials and Cohen-Macaulay type");
    add_family(socle);
    add_ideal(socle);
    add_common(socle);

    auto* search = app.add_subcommand("search", "sign patterns over a parameter grid");
    search->add_option("--m", opt.m, "m values: 2..4, 2,3 or 5");
    search->add_option("--a", opt.a, "a values, shared or per position joined by /");
    search->add_option("--p-rule", opt.p_rule, "product (default) or minimal");
    add_kmax(search);
    add_common(search);

    auto* selftest = app.add_subcommand("selftest", "fast path vs brute-force oracle");
    selftest->add_option("--seed", opt.seed, "base seed");
    selftest->add_option("--count", opt.count, "number of random cases");
    add_common(selftest);

    std::vector<std::string> argv_storage{"staircase"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::ostringstream body;
    int code = kOk;
    try {
        std::optional<ScopedExponentCeiling> ceiling;
        if (auto limit = ceiling_from_env()) {
            ceiling.emplace(*limit);
        }
        if (opt.format == Format::plain && !opt.no_banner && sub != search) {
            body << "staircase " << kVersion << '\n';
        }
        Context ctx(opt, sub, in, err);
        if (sub == construct) {
            code = cmd_construct(ctx, opt.format, body);
        } else if (sub == pow) {
            code = cmd_power(ctx, opt, opt.format, body);
        } else if (sub == mu_cmd) {
            code = cmd_mu(ctx, opt, opt.format, body);
        } else if (sub == table) {
            code = cmd_table(ctx, opt, opt.format, body, err);
        } else if (sub == verify) {
            code = cmd_verify(ctx, opt, opt.format, body, err);
        } else if (sub == socle) {
            code = cmd_socle(ctx, opt, opt.format, body);
        } else if (sub == search) {
            code = cmd_search(opt, opt.format, body, err);
        } else {
            code = cmd_selftest(opt, opt.format, body, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ExponentOverflow& e) {
        err << "error: " << e.what() << "\n(try a smaller --kmax or smaller parameters)\n";
        return kOverflow;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    if (code == kUsage) {
        return code;
    }
    if (opt.out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!(file << body.str())) {
            err << "error: cannot write " << opt.out_path << '\n';
            return kInvalidInput;
        }
    }
    return code;
}

}  // namespace staircase::cli
