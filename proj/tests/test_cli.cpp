#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "deltakit/cli.hpp"
#include "deltakit/io.hpp"

using namespace deltakit;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DELTAKIT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("Penrose polynomial of a single twisted loop") {
    const Result r = run({"dm-penrose", data("x0.json")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "-l + 1\n");
}

TEST_CASE("eight-element example twist witnesses") {
    const Result r = run({"dm-twistrec", data("fig1.json")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "{1,6,7} {2,6,7} {1,3,4,5,8} {2,3,4,5,8}\n");
}

TEST_CASE("obstructions have no twist witness") {
    const Result r = run({"dm-twistrec", data("x1.json")});
    CHECK(r.code == cli::kFalse);
    CHECK(r.out == "none\n");
}

TEST_CASE("predicates and their exit codes") {
    CHECK(run({"dm-validate", data("x0.json")}).code == cli::kOk);
    CHECK(run({"dm-validate", data("improper.json")}).code == cli::kUsage);
    CHECK(run({"bm-eulerian", data("k4.json")}).code == cli::kFalse);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"dm-penrose"}).code == cli::kUsage);
    CHECK(run({"dm-penrose", data("missing.json")}).code == cli::kUsage);
    CHECK(run({"dm-twist", data("x0.json"), "--set", "z"}).code == cli::kUsage);
    CHECK(run({"suite-run", "nope"}).code == cli::kUsage);
    CHECK(run({"dm-penrose", data("x0.json"), "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("parse errors name the field") {
    const Result r = run({"dm-validate", data("improper.json")});
    CHECK(r.err.find("feasible") != std::string::npos);
}

TEST_CASE("ribbon graph counts") {
    const Result r = run({"rg-genus", data("torus.json")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("faces 1\n") != std::string::npos);
    CHECK(r.out.find("euler_genus 2\n") != std::string::npos);
    CHECK(r.out.find("orientable true\n") != std::string::npos);
}

TEST_CASE("ribbon graph to delta-matroid") {
    CHECK(run({"rg-to-dm", data("torus.json")}).out == "({a,b},{{},{a,b}})\n");
    CHECK(run({"rg-to-dm", data("g0.json")}).out == "({a},{{},{a}})\n");
}

TEST_CASE("dual output re-parses") {
    const Result r = run({"rg-dual", data("torus.json")});
    CHECK(r.code == cli::kOk);
    CHECK_NOTHROW(parse_rotation_system(r.out));
}

TEST_CASE("twist on the command line") {
    CHECK(run({"dm-twist", data("x0.json"), "--set", "a"}).out == "({a},{{},{a}})\n");
    CHECK(run({"dm-twist", data("x1.json"), "--set", "a,b,c"}).out == "({a,b,c},{{},{a,b},{a,c},{b,c}})\n");
}

TEST_CASE("json output") {
    const Result r = run({"dm-penrose", data("x1.json"), "--format", "json"});
    CHECK(r.out == "{\"polynomial\":\"-l^2 + 3*l - 2\"}\n");
}

TEST_CASE("Bollobas-Riordan of a single twisted loop") {
    CHECK(run({"dm-br", data("x0.json")}).out == "y*z + 1\n");
}

TEST_CASE("binary spaces of K4") {
    const Result r = run({"bm-spaces", data("k4.json")});
    CHECK(r.out.find("cycle dim 3") != std::string::npos);
    CHECK(r.out.find("bicycle dim 2") != std::string::npos);
}

TEST_CASE("suite runs report and repeat") {
    const Result a = run({"suite-run", "fig1", "--seed", "3"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out.find("PASS 8/8") != std::string::npos);
    const std::vector<std::string> args = {"suite-run", "compat", "--seed", "7", "--trials", "40"};
    const Result one = run({args[0], args[1], args[2], args[3], args[4], args[5], "--threads", "1"});
    const Result many = run({args[0], args[1], args[2], args[3], args[4], args[5], "--threads", "3"});
    CHECK(one.out == many.out);
    CHECK(one.out.find("PASS 160/160") != std::string::npos);
}
