#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mckay/cli.hpp"
#include "test_util.hpp"

using namespace mckay;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("mckay_cli_test_" + name);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("hj subcommand prints the bracketed sequence") {
    auto r = run({"hj", "15", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "[8, 2]\n");
    CHECK(run({"hj", "5", "4"}).out == "[2, 2, 2, 2]\n");
}

TEST_CASE("exit code contract") {
    CHECK(run({}).code == 1);                          // usage
    CHECK(run({"frobnicate"}).code == 1);              // unknown subcommand
    CHECK(run({"hj", "15"}).code == 1);                // missing argument
    CHECK(run({"hj", "15", "10"}).code == 2);          // domain error (gcd)
    CHECK(run({"triangulate", "1/6(1,1,5)"}).code == 2); // invariant violation
    CHECK(run({"--version"}).out == std::string(kVersion) + "\n");
}

TEST_CASE("triangulate writes deterministic json and svg") {
    auto jpath = temp_file("tri.json"), spath = temp_file("tri.svg");
    auto r = run({"triangulate", "1/15(1,2,12)", "--json", jpath.string(), "--svg", spath.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("15 triangles (valid)") != std::string::npos);
    auto first = slurp(jpath);
    run({"triangulate", "1/15(1,2,12)", "--json", jpath.string()});
    CHECK(slurp(jpath) == first); // byte-identical reruns
    CHECK(slurp(spath).find("<svg") == 0);
    fs::remove(jpath);
    fs::remove(spath);
}

TEST_CASE("mark prints characters and honors --json") {
    auto jpath = temp_file("mark.json");
    auto r = run({"mark", "1/6(1,1,4)", "--json", jpath.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("7 internal edges marked") != std::string::npos);
    CHECK(r.out.find("(E2,ex) -> chi_2") != std::string::npos);
    auto j = nlohmann::json::parse(slurp(jpath));
    CHECK(j.size() == 7);
    fs::remove(jpath);
}

TEST_CASE("classify --check-theorem passes on the worked family group") {
    auto r = run({"classify", "1/28(1,3,24)", "--check-theorem"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theorem chi_4: match") != std::string::npos);
    CHECK(r.out.find("character condition: pass") != std::string::npos);
    CHECK(r.out.find("bound_holds true") != std::string::npos);
    // not in the family
    CHECK(run({"classify", "1/7(1,1,5)", "--check-theorem"}).code == 2);
}

TEST_CASE("quiver and subquiver commands") {
    auto dpath = temp_file("q.dot");
    auto r = run({"quiver", "1/6(1,1,4)", "--dot", dpath.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("6 vertices, 18 arrows") != std::string::npos);
    CHECK(slurp(dpath).find("digraph") == 0);
    fs::remove(dpath);

    auto sub = run({"subquiver", "1/6(1,1,4)", "--type", "Atilde1", "--vertices", "1,2"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("graph_match true") != std::string::npos);
    CHECK(sub.out.find("acyclic true") != std::string::npos);
    CHECK(sub.out.find("relation_free true") != std::string::npos);

    auto thm = run({"subquiver", "1/66(1,5,60)", "--type", "Dtilde6", "--theorem"});
    CHECK(thm.code == 0);
    CHECK(thm.out.find("{16,22,23,27,31,32,38}") != std::string::npos);

    auto find = run({"subquiver", "1/15(1,2,12)", "--type", "Atilde2", "--find"});
    CHECK(find.code == 0);
    CHECK(find.out.find("{1,2,3}") != std::string::npos);

    auto bad = run({"subquiver", "1/3(1,1,1)", "--type", "Atilde2", "--vertices", "0,1,2"});
    CHECK(bad.code == 2);
}

TEST_CASE("hall subcommands") {
    auto prod = run({"hall", "--quiver", "A2", "--q", "2", "product", "S1", "S2"});
    CHECK(prod.code == 0);
    CHECK(prod.out.find("M1-2") != std::string::npos);
    auto serre = run({"hall", "--quiver", "kronecker", "--q", "2", "serre", "1", "2"});
    CHECK(serre.code == 0);
    CHECK(serre.out.find("relation degree 3: holds") != std::string::npos);
    auto gd = run({"hall", "--quiver", "A2", "--q", "3", "gradeddim", "2,1"});
    CHECK(gd.code == 0);
    CHECK(gd.out.find("equal") != std::string::npos);
    auto ip = run({"hall", "--quiver", "A2", "interpolate", "S1", "S2", "M1-2"});
    CHECK(ip.code == 0);
    CHECK(ip.out.find("value at q=1: 1") != std::string::npos);
    auto audit = run({"hall", "--quiver", "A2", "--q", "2", "--mode", "paper", "audit"});
    CHECK(audit.code == 0);
    CHECK(audit.out.find("associativity failures") != std::string::npos);
}

TEST_CASE("scan emits one row per s with error rows inline") {
    auto cpath = temp_file("scan.csv");
    auto r = run({"scan", "--k", "3", "--s-list", "24,25,36", "--csv", cpath.string()});
    CHECK(r.code == 0);
    auto csv = slurp(cpath);
    CHECK(csv.find("k,s,r,h0_count,ratio,lower_bound,bound_holds,condition_check,error\n") == 0);
    CHECK(csv.find("3,24,28,16,0.592593,10.5,true,true,\n") != std::string::npos);
    CHECK(csv.find("3,25,29,,,,,,") != std::string::npos); // error row, scan continues
    CHECK(csv.find("3,36,40,24,") != std::string::npos);
    fs::remove(cpath);
}
