#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wbafrac/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = wbafrac::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("wbafrac_test_" + name)).string();
}

}  // namespace

TEST_CASE("cli exit codes")
{
    CHECK(run({"check", "sweedler", "--suite", "wba,coquasi"}).code == 0);
    CHECK(run({"check", "sweedler", "--param", "antipode=printed", "--suite", "antipode"}).code == 1);
    CHECK(run({"check", "nope"}).code == 2);
    CHECK(run({"check", "sweedler", "--suite", "bogus"}).code == 2);
    CHECK(run({"check", "sweedler", "--param", "alpha"}).code == 2);
    CHECK(run({"build", "mq2", "--cutoff", "x"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"localize", "sweedler", "--at", "y", "--strategy", "declared-regular"}).code == 1);
    CHECK(run({"localize", "sweedler", "--at", "f", "--strategy", "sideways"}).code == 2);
}

TEST_CASE("cli check report carries version, params, cutoff and strategies")
{
    Result r = run({"check", "mq2", "--suite", "wba,central"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["version"] == "0.1.0");
    CHECK(j["params"]["r"] == "3");
    CHECK(j["cutoff"] == 3);
    CHECK(j.contains("strategies"));
    CHECK(j["suites"]["wba"]["passed"] == true);
    CHECK(j["passed"] == true);
}

TEST_CASE("cli output is deterministic")
{
    for (std::vector<std::string> args : {std::vector<std::string>{"check", "sweedler"},
                                          std::vector<std::string>{"localize", "h4"},
                                          std::vector<std::string>{"dims", "mq2"}}) {
        CAPTURE(args[0]);
        Result a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli localize h4 at zerobar, onebar")
{
    Result r = run({"localize", "h4", "--at", "zerobar,onebar", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dimension 1") != std::string::npos);
    json j = json::parse(run({"localize", "h4", "--at", "zerobar,onebar"}).out);
    CHECK(j["dimensions"]["total"] == 1);
}

TEST_CASE("cli detq r = 3 prints four terms")
{
    Result r = run({"detq", "--r", "3", "--emit", "-"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["terms"].size() == 4);
    CHECK(j["terms"]["[(0,1,0)|(1,0,1)]"] == "-1");
    CHECK(run({"detq", "--r", "4", "--check"}).code == 0);
}

TEST_CASE("cli text format shows failure witnesses")
{
    Result r = run({"check", "sweedler", "--param", "antipode=printed", "--suite", "antipode", "--format", "text"});
    CHECK(r.code == 1);
    CHECK(r.out.find("violated") != std::string::npos);
}

TEST_CASE("cli emit round trip")
{
    const std::string first = temp_path("emit1.json"), second = temp_path("emit2.json");
    REQUIRE(run({"emit", "sweedler", "-o", first}).code == 0);
    REQUIRE(run({"emit", "--load", first, "-o", second}).code == 0);
    std::ifstream a(first), b(second);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(json::parse(sa.str())["wba"]["blocks"].size() == 1);
    std::remove(first.c_str());
    std::remove(second.c_str());
    CHECK(run({"emit", "--load", temp_path("missing.json")}).code == 2);
}

TEST_CASE("cli catalog subcommands")
{
    Result r = run({"catalog", "list"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["examples"].size() == 11);
    CHECK(run({"catalog", "build", "graph", "--r", "4"}).code == 0);
}
