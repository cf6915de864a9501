#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "staircase/cli.hpp"
#include "staircase/io.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    int code = staircase::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream file(path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

const std::vector<std::string> kExample{"--m", "5", "--p", "72,18,12,8,2", "--a", "3,5,8,35"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

bool has(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("construct") {
    auto r = run(with({"construct", "--no-banner"}, kExample));
    CHECK(r.code == 0);
    CHECK(has(r.out, "I_1 mu=4 deg=504 [[0,504],[72,432],[432,72],[504,0]]"));
    CHECK(has(r.out, "I_2 mu=3 deg=576 [[162,414],[180,396],[198,378]]"));
    CHECK(has(r.out, "I mu=55 deg=504"));

    auto single = run({"construct", "--format", "json", "--m", "1", "--p", "2"});
    CHECK(single.code == 0);
    CHECK(has(single.out, R"("ideal":[[0,6],[2,4],[4,2],[6,0]])"));

    auto bad = run({"construct", "--m", "2", "--p", "6,4", "--a", "2"});
    CHECK(bad.code == staircase::cli::kInvalidInput);
    CHECK(has(bad.err, "p1 != (a_2+1)*p_2"));
    CHECK(bad.out.empty());
}

TEST_CASE("params file and banner") {
    auto r = run({"construct", "--params", STAIRCASE_FIXTURE_DIR "/example_m5.json"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("staircase ", 0) == 0);
    CHECK(has(r.out, "I mu=55"));
}

TEST_CASE("table") {
    auto r = run(with({"table", "--kmax", "6", "--format", "csv"}, kExample));
    CHECK(r.code == 0);
    CHECK(r.out == slurp(STAIRCASE_FIXTURE_DIR "/example_m5_expected.csv"));

    auto chosen = run({"table", "--choose-n", "2", "--kmax", "4", "--format", "json"});
    CHECK(chosen.code == 0);
    auto doc = staircase::io::json::parse(chosen.out);
    std::vector<std::size_t> mus;
    for (const auto& row : doc["reports"]) {
        mus.push_back(row["mu_computed"]);
    }
    CHECK(mus == std::vector<std::size_t>{10, 9, 13, 17});
    CHECK(doc["ok"] == true);

    auto one = run(with({"table", "--kmax", "1", "--format", "csv"}, kExample));
    CHECK(one.code == 0);
    CHECK(one.out == "k,mu_computed,mu_predicted,structure_ok,cm_type,degree\n1,55,55,true,54,504\n");
}

TEST_CASE("mu, power and round trips through construct output") {
    auto built = run(with({"construct", "--format", "json"}, kExample));
    REQUIRE(built.code == 0);
    auto m = run({"mu", "--ideal", "-", "--no-banner"}, built.out);
    CHECK(m.code == 0);
    CHECK(m.out == "55\n");
    auto m2 = run({"mu", "--ideal", "-", "--k", "2", "--format", "csv"}, built.out);
    CHECK(m2.out == "k,mu\n2,41\n");
    auto direct = run(with({"mu", "--k", "6", "--format", "json"}, kExample));
    CHECK(direct.out == "{\"k\":6,\"mu\":43}\n");

    auto sq = run(with({"power", "--k", "2", "--format", "json"}, kExample));
    REQUIRE(sq.code == 0);
    auto again = run({"mu", "--ideal", "-", "--no-banner"}, sq.out);
    CHECK(again.out == "41\n");

    auto socle_direct = run(with({"socle", "--k", "2", "--format", "json"}, kExample));
    auto socle_piped = run({"socle", "--ideal", "-", "--format", "json"}, sq.out);
    CHECK(socle_direct.out == socle_piped.out);
}

TEST_CASE("socle") {
    auto r = run({"socle", "--ideal", "-", "--no-banner"}, "[[0,2],[1,1],[2,0]]");
    CHECK(r.code == 0);
    CHECK(has(r.out, "cm_type=2"));
    CHECK(has(r.out, "socle=[[0,1],[1,0]]"));
    CHECK(has(r.out, "type == mu - 1: ok"));

    auto family = run(with({"socle", "--format", "json"}, kExample));
    CHECK(family.code == 0);
    auto doc = staircase::io::json::parse(family.out);
    CHECK(doc["cm_type"] == 54);
    CHECK(doc["colon_ok"] == true);

    auto open = run({"socle", "--ideal", "-"}, "[[2,0],[1,1]]");
    CHECK(open.code == staircase::cli::kInvalidInput);
    CHECK(has(open.err, "not (x,y)-primary"));

    auto messy = run({"socle", "--ideal", "-"}, "[[2,0],[0,2],[2,2]]");
    CHECK(messy.code == 0);
    CHECK(has(messy.err, "canonical"));
}

TEST_CASE("search") {
    auto r = run({"search", "--m", "2", "--a", "2..8", "--kmax", "3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "m,p,a,sign_pattern,mu_sequence");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
    }
    CHECK(rows == 7);
    CHECK(has(r.out, "2,14;2,6,-+,10;9;13"));

    auto example = run({"search", "--m", "5", "--a", "3/5/8/35", "--kmax", "6"});
    CHECK(has(example.out, ",----+,55;41;40;37;36;43"));

    auto empty = run({"search", "--m", "5..4", "--a", "2"});
    CHECK(empty.code == staircase::cli::kUsage);
    CHECK(has(empty.err, "no valid tuples"));
    auto invalid_only = run({"search", "--m", "5", "--a", "2"});
    CHECK(invalid_only.code == staircase::cli::kUsage);
    CHECK(has(invalid_only.err, "skip m=5"));
}

TEST_CASE("verify") {
    auto headline = run({"verify", "--choose-n", "3", "--format", "csv"});
    CHECK(headline.code == 0);
    CHECK(has(headline.out, "3,16,16,true,15,"));
    auto explicit_params = run(with({"verify", "--kmax", "6"}, kExample));
    CHECK(explicit_params.code == 0);
    CHECK(has(explicit_params.out, "consistent: yes"));
    auto short_table = run({"verify", "--choose-n", "4", "--kmax", "2"});
    CHECK(short_table.code == staircase::cli::kUsage);
}

TEST_CASE("exit-code contract") {
    CHECK(run({}).code == staircase::cli::kUsage);
    CHECK(run({"frobnicate"}).code == staircase::cli::kUsage);
    CHECK(run({"table", "--kmax", "0", "--choose-n", "2"}).code == staircase::cli::kUsage);
    CHECK(run(with({"table", "--choose-n", "2"}, kExample)).code == staircase::cli::kUsage);
    CHECK(run({"table"}).code == staircase::cli::kUsage);
    CHECK(run({"mu", "--ideal", "-"}, "[[1,").code == staircase::cli::kInvalidInput);
    CHECK(run({"--help"}).code == 0);

    // p_1 = 2^63 makes (m+1) p_1 overflow
    auto huge = run({"table", "--m", "2", "--p", "9223372036854775808,2305843009213693952",
                     "--a", "3"});
    CHECK(huge.code == staircase::cli::kOverflow);
    CHECK(huge.out.empty());
    CHECK(has(huge.err, "overflow"));
}

TEST_CASE("STAIRCASE_MAX_EXP lowers the ceiling") {
    ::setenv("STAIRCASE_MAX_EXP", "1000", 1);
    auto low = run(with({"table", "--kmax", "2"}, kExample));
    auto fits = run(with({"table", "--kmax", "1"}, kExample));
    ::unsetenv("STAIRCASE_MAX_EXP");
    CHECK(low.code == staircase::cli::kOverflow);
    CHECK(low.out.empty());
    CHECK(fits.code == 0);
    CHECK(run(with({"table", "--kmax", "2"}, kExample)).code == 0);
}

TEST_CASE("output is deterministic and can go to a file") {
    auto a = run(with({"table", "--kmax", "6"}, kExample));
    auto b = run(with({"table", "--kmax", "6"}, kExample));
    CHECK(a.out == b.out);

    auto path = (std::filesystem::temp_directory_path() / "staircase_cli_test.csv").string();
    auto r = run(with({"table", "--kmax", "6", "--format", "csv", "--out", path}, kExample));
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == slurp(STAIRCASE_FIXTURE_DIR "/example_m5_expected.csv"));
    std::filesystem::remove(path);
}

TEST_CASE("selftest") {
    auto r = run({"selftest", "--seed", "3", "--count", "25"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "25 cases, 0 mismatches"));
}
