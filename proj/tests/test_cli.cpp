#include <seifert/cli_app.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace seifert;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify subcommand", "[cli]") {
    auto r = cli({"classify", "(-1; 1/2, 1/3, 1/7)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("admits a taut foliation") != std::string::npos);
    CHECK(r.out.find("m=5 alpha=2") != std::string::npos);

    auto j = cli({"classify", "(-1; 1/2, 1/3, 1/7)", "--format", "json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["verdict"] == "admits");
    CHECK(parsed["witness_m"] == 5);

    auto c = cli({"classify", "(-1; 1/2, 1/3, 1/7)", "--format", "csv"});
    CHECK(c.out.find("slopes,euler,b0") == 0);
    CHECK(c.out.find("1/2;1/3;1/7") != std::string::npos);
}

TEST_CASE("witness subcommand", "[cli]") {
    auto r = cli({"witness", "(-2; 1/2, 2/3, 6/7)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("flipped:   yes") != std::string::npos);
    CHECK(r.out.find("witness:   m=5 alpha=2") != std::string::npos);

    auto j = cli({"witness", "(-1; 1/2, 2/5, 1/9)", "--format", "json"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["branch"] == "CaseII_b2Ge2");
    CHECK(parsed["witness_m"] == 7);
    CHECK(parsed["witness_alpha"] == 3);
}

TEST_CASE("census subcommand", "[cli]") {
    auto text = cli({"census", "zhs", "--n", "3", "--a-max", "7", "--format", "text"});
    CHECK(text.code == 0);
    CHECK(std::count(text.out.begin(), text.out.end(), '\n') == 8);

    auto limited = cli({"census", "zhs", "--n", "3", "--a-max", "7", "--format", "jsonl",
                        "--limit", "3"});
    CHECK(std::count(limited.out.begin(), limited.out.end(), '\n') == 3);

    auto csv = cli({"census", "qhs", "--n", "3", "--a-max", "3", "--format", "csv"});
    CHECK(csv.out.find("slopes,euler,b0") == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 20); // header + 19 rows

    auto restricted = cli({"census", "qhs", "--n", "3", "--a-max", "3", "--b0", "1,2",
                           "--format", "jsonl"});
    CHECK(restricted.code == 0);
}

TEST_CASE("census output file", "[cli]") {
    std::string path = "cli_census_out.jsonl";
    auto to_file = cli({"census", "zhs", "--n", "3", "--a-max", "7", "--output", path});
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    auto direct = cli({"census", "zhs", "--n", "3", "--a-max", "7"});
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("family subcommand", "[cli]") {
    auto r = cli({"family", "m3", "--k-max", "3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK(r.out.find("m=7 alpha=3") != std::string::npos);

    auto m1 = cli({"family", "m1", "--a-max", "8", "--format", "jsonl"});
    CHECK(std::count(m1.out.begin(), m1.out.end(), '\n') == 9);
    CHECK(m1.out.find("\"verdict\":\"no_taut\"") != std::string::npos);
}

TEST_CASE("verify subcommand", "[cli]") {
    auto r = cli({"verify", "claims", "--a-max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("triple-bounds") != std::string::npos);
    CHECK(r.out.find("step-bounds") != std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);

    auto j = cli({"verify", "zhs-unique", "--a-max", "10", "--format", "json"});
    auto parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["claim"] == "zhs-unique");
    CHECK(parsed[0]["passed"] == true);

    auto c = cli({"verify", "claims", "--a-max", "10", "--format", "csv"});
    CHECK(c.out.find("claim,bounds,kind,detail,count\n") == 0);
    // one header only, even with two reports
    CHECK(c.out.find("claim,bounds", 10) == std::string::npos);
}

TEST_CASE("spelling variants select the same runs", "[cli]") {
    auto flag = cli({"census", "--qhs", "--n", "3", "--amax", "3", "--format", "csv"});
    auto positional = cli({"census", "qhs", "--n", "3", "--a-max", "3", "--format", "csv"});
    CHECK(flag.code == 0);
    CHECK(flag.out == positional.out);

    std::string path = "cli_alias_out.jsonl";
    auto to_file = cli({"census", "--zhs", "--amax", "7", "--out", path});
    CHECK(to_file.code == 0);
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str() == cli({"census", "zhs", "--a-max", "7"}).out);
    std::remove(path.c_str());

    CHECK(cli({"census", "--amax", "5"}).code == 2);             // kind missing
    CHECK(cli({"census", "zhs", "--qhs", "--amax", "5"}).code == 2);
    CHECK(cli({"census", "--zhs", "--qhs", "--amax", "5"}).code == 2);
}

TEST_CASE("usage and domain errors exit with 2", "[cli]") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"classify"}).code == 2);
    CHECK(cli({"classify", "not an invariant"}).code == 2);
    CHECK(cli({"classify", "(-1; 1/2, 1/3, 1/7)", "--format", "yaml"}).code == 2);
    CHECK(cli({"witness", "(-1; 1/2, 1/3, 1/5)"}).code == 2);  // spherical exception
    CHECK(cli({"witness", "(0; 1/2, 1/2)"}).code == 2);        // not integral
    CHECK(cli({"census", "zhs", "--n", "3", "--a-max", "5", "--b0", "1"}).code == 2);
    CHECK(cli({"verify", "nonsense"}).code == 2);

    auto r = cli({"classify", "(-1; 2/4)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("help exits cleanly", "[cli]") {
    auto top = cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("classify") != std::string::npos);
    auto sub = cli({"census", "--help"});
    CHECK(sub.code == 0);
}
