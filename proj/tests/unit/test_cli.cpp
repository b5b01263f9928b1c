#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chordlab/cli.hpp"

using namespace chordlab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("chordlab_test_" + name);
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("poly subcommand") {
    auto r = cli({"poly", "--name", "Mn", "--n", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "s^3*t^3 + 6*s*t^2*x*y + 4*t*x^2*y + 4*t*x*y^2\n");
    CHECK(cli({"poly", "--name", "NCA", "--n", "2"}).out == "x + y + z\n");
    CHECK(cli({"poly", "--name", "dBn", "--n", "3"}).out == "x^3 + 20*x^2 + 8*x\n");
    CHECK(cli({"poly", "--name", "Qn", "--n", "1"}).out == "x*y*z\n");
    CHECK(cli({"poly", "--name", "Anxy", "--n", "2"}).out == "x + y\n");
    const auto j = nlohmann::json::parse(cli({"poly", "--name", "gamma", "--n", "3", "--format", "json"}).out);
    CHECK(j["family"] == "gamma");
    CHECK(j["entries"].size() == 2);
    CHECK(cli({"poly", "--name", "Mn", "--n", "3", "--format", "json"}).code == kExitUsage);
    CHECK(cli({"poly", "--name", "Zn", "--n", "3"}).code == kExitUsage);
}

TEST_CASE("grammar subcommand") {
    const auto rules = scratch_file("eulerian.g", "# a and b both go to ab\na -> a*b\nb -> a*b\n");
    auto r = cli({"grammar", "--rules", rules.string(), "--seed", "a", "--iterations", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "a^2*b + a*b^2\n");

    const auto bad = scratch_file("bad.g", "a -> a*\n");
    r = cli({"grammar", "--rules", bad.string(), "--seed", "a", "--iterations", "1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find(bad.string() + ":1:") != std::string::npos);

    r = cli({"grammar", "--rules", "/nonexistent/rules.g", "--seed", "a", "--iterations", "1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("/nonexistent/rules.g") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
    auto r = cli({"enumerate", "--family", "matchings", "--n", "2", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "n,rank,arcs,fixb,elblock,olblock,esblock,osblock,cr,ne,al,lne,lcr,nal,lrp,rrp,trace\n"
          "2,0,\"(1,2)(3,4)\",2,0,0,0,0,0,0,1,0,0,1,2,0,2\n"
          "2,1,\"(1,3)(2,4)\",0,1,1,1,1,1,0,0,0,1,0,1,1,1\n"
          "2,2,\"(2,3)(1,4)\",0,1,1,1,1,0,1,0,1,0,0,1,1,1\n");
    const auto j = nlohmann::json::parse(cli({"enumerate", "--family", "perms", "--n", "3", "--format", "json"}).out);
    REQUIRE(j.size() == 6);
    CHECK(j[5]["oneline"] == "3 2 1");
    CHECK(j[5]["inv"] == 3);
    r = cli({"enumerate", "--family", "derangements", "--n", "3", "--format", "csv"});
    CHECK(r.out.find("3,3,2 3 1,") != std::string::npos);
    CHECK(cli({"enumerate", "--family", "trees0123", "--n", "4", "--format", "csv"}).out.find("\"1(2(3(4)))\"") !=
          std::string::npos);
    for (const char* f : {"mwords", "signed", "stirling", "trees012"}) {
        CHECK(cli({"enumerate", "--family", f, "--n", "2"}).code == kExitOk);
    }
}

TEST_CASE("guardrails and usage errors") {
    auto r = cli({"enumerate", "--family", "signed", "--n", "9"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("--force") != std::string::npos);
    CHECK(cli({"poly", "--name", "Mn", "--n", "11"}).code == kExitUsage);
    CHECK(cli({"verify", "--checks", "M-MAIN", "--max-n", "11"}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"verify", "--checks", "NOPE"}).code == kExitUsage);
    CHECK(cli({"enumerate", "--family", "perms"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("verify subcommand") {
    auto r = cli({"verify", "--checks", "M-MAIN,NCA-RECU", "--max-n", "4"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"].size() == 2);
    CHECK(j["results"][1]["id"] == "NCA-RECU");

    r = cli({"verify", "--checks", "A-EQUIDIST", "--max-n", "3", "--report", "text"});
    CHECK(r.code == kExitCheckFailed);
    CHECK(r.out.find("lhs - rhs") != std::string::npos);

    const auto a = cli({"verify", "--checks", "C-EPOS,B-MAIN", "--max-n", "4", "--jobs", "1"});
    const auto b = cli({"verify", "--checks", "C-EPOS,B-MAIN", "--max-n", "4", "--jobs", "4"});
    CHECK(a.out == b.out);
}

TEST_CASE("output file and job count from the environment") {
    const auto path = std::filesystem::temp_directory_path() / "chordlab_test_out.txt";
    std::filesystem::remove(path);
    auto r = cli({"poly", "--name", "An", "--n", "3", "--out", path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x^2 + 4*x + 1");

    setenv("CHORDLAB_JOBS", "3", 1);
    CHECK(cli({"poly", "--name", "Mn", "--n", "3"}).code == kExitOk);
    setenv("CHORDLAB_JOBS", "zero", 1);
    CHECK(cli({"poly", "--name", "Mn", "--n", "3"}).code == kExitUsage);
    unsetenv("CHORDLAB_JOBS");
}
