#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cayley/cli.hpp"

using namespace cayley;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("cli_test_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("euler pairing of the structure sheaf with itself") {
    auto r = run({"euler", "O", "O"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("cohomology on both spaces with json output") {
    auto r = run({"coh", "--space", "cg", "--format", "json", "S{0,0,-3}U*"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["determined"] == true);
    REQUIRE(doc["cohomology"].size() == 1);
    CHECK(doc["cohomology"][0]["degree"] == 2);
    CHECK(doc["cohomology"][0]["dim"] == 1);
    CHECK(doc["cohomology"][0]["reps"][0]["weight"] ==
          json::array({-1, -1, -1, -1, -1, -1, -1}));

    auto gr = run({"coh", "--space", "gr", "S{0,0,-3}U*"});
    CHECK(gr.code == 0);
    CHECK(gr.out.find("= 0") != std::string::npos);
}

TEST_CASE("ext command reports graded dimensions") {
    auto r = run({"ext", "--format", "json", "S{2,1}U*", "S{2,1}U*(-1)"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["determined"] == true);
    REQUIRE(doc["dims"].size() == 1);
    CHECK(doc["dims"][0]["degree"] == 2);
    CHECK(doc["dims"][0]["dim"] == 1);
}

TEST_CASE("table command emits every cell and stable markdown") {
    auto r = run({"table", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["rows"].size() == 42);
    int highlighted = 0;
    for (const auto& row : doc["rows"]) {
        CHECK(row["determined"] == true);
        if (row["highlighted"]) ++highlighted;
    }
    CHECK(highlighted == 4);

    auto md1 = run({"table", "--format", "markdown"});
    auto md2 = run({"table", "--format", "markdown"});
    CHECK(md1.out == md2.out);
    CHECK(md1.out.find("| S{0,0,-3}U* | 0 | k(det^-1)[-2] | x |") !=
          std::string::npos);
    CHECK(md1.out.find("| S{2,1,0}U* | S{2,1}V* | S{2,1}V* |  |") !=
          std::string::npos);
}

TEST_CASE("builtin collection verifies as exceptional") {
    auto r = run({"check-collection", "--builtin", "cg15", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["verdict"] == "EXCEPTIONAL");
    CHECK(doc["unresolved"].empty());
    CHECK(doc["cells"].size() == 15 * 15);
    CHECK(doc["lefschetz"]["valid"] == true);
}

TEST_CASE("collection files pass and fail through exit codes") {
    TempFile good("good.txt", "O\nU*\n--- block\nO(1)\nU*(1)\n");
    auto ok = run({"check-collection", good.path});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("EXCEPTIONAL") != std::string::npos);

    // a repeated object has Hom = k in both directions: verification fails
    TempFile bad("bad.txt", "O\nO\n");
    auto fail = run({"check-collection", bad.path, "--print"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("FAILED") != std::string::npos);

    auto missing = run({"check-collection", "no_such_file.txt"});
    CHECK(missing.code == 64);
}

TEST_CASE("usage errors exit with code 64") {
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"coh", "--space", "p2", "O"}).code == 64);
    CHECK(run({"coh", "--space", "cg", "S{2,2}X"}).code == 64);
    CHECK(run({"coh", "--space", "cg", "O[1]"}).code == 64);
    CHECK(run({"check-collection"}).code == 64);
    CHECK(run({"g2", "everything"}).code == 64);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("residual report succeeds with blocked cells disclosed") {
    auto r = run({"residual", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["verdict"] == "VERIFIED");
    CHECK(doc["chi_orthogonal"] == true);
    CHECK(doc["cells"].size() == 9);
}

TEST_CASE("g2 subcommands verify") {
    for (std::string mode : {"forms", "bracket", "conic", "ilambda"}) {
        auto r = run({"g2", mode});
        CHECK(r.code == 0);
        CHECK(r.out.find("VERIFIED") != std::string::npos);
    }
    auto sweep = run({"g2", "phirank", "--samples", "25", "--jobs", "2"});
    CHECK(sweep.code == 0);
}

TEST_CASE("verify-all is deterministic for a fixed seed") {
    std::vector<std::string> args = {"verify-all", "--format", "json",
                                     "--seed", "41", "--jobs", "3"};
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["verdict"] == "VERIFIED");
    CHECK(doc["checks"].size() == 9);
}

TEST_CASE("reports can be written to a file") {
    auto r = run({"euler", "O", "U*", "--out", "cli_test_out.txt"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in("cli_test_out.txt");
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "7\n");
    std::remove("cli_test_out.txt");
}
