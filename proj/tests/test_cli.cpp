#include "homodec/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace homodec;
using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string> &args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    CliResult result;
    result.code = run_cli(args, in, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

const char *PAW = "4 4 undirected\n0 1\n0 2\n1 2\n2 3\n";
const char *TT3 = "3 3 directed\n0 1\n0 2\n1 2\n";
const char *STAR_JSON = R"({"n":4,"classes":[[[1],[2],[3]],[[0,2,3]],[[0,1,3]],[[0,1,2]]]})";
const char *BIPARTITE_STAR = "3 1 bipartite\ncolors: 0\n0 1\n";
const char *ORDERED_2STRUCTURE =
    "3 6 2structure\n0 1 0\n1 0 1\n0 2 0\n2 0 1\n1 2 1\n2 1 0\n";

} // namespace

TEST_CASE("cli: help exits cleanly") {
    CliResult result = run({"--help"});
    CHECK(result.code == 0);
    CHECK(result.out.find("decompose") != std::string::npos);
    CHECK(result.out.find("check") != std::string::npos);
}

TEST_CASE("cli: decompose emits the inclusion tree as json") {
    CliResult result = run({"decompose", "-"}, PAW);
    REQUIRE(result.code == 0);
    CHECK(json::parse(result.out) == json::parse(R"({
        "node": {
          "members": [0, 1, 2, 3], "kind": "unclassified", "children": [
            {"members": [0, 1, 3], "kind": "unclassified", "children": [
              {"members": [0, 1], "kind": "unclassified", "children": [
                {"members": [0], "kind": "leaf", "children": []},
                {"members": [1], "kind": "leaf", "children": []}]},
              {"members": [3], "kind": "leaf", "children": []}]},
            {"members": [2], "kind": "leaf", "children": []}]}})"));
    CHECK(run({"decompose", "-"}, PAW).out == result.out);
}

TEST_CASE("cli: decompose labels nodes in the text outline") {
    CliResult result = run({"decompose", "-", "--type-nodes", "--format", "text"}, PAW);
    CHECK(result.code == 0);
    CHECK(result.out == "{0,1,2,3} degenerate\n"
                        "  {0,1,3} degenerate\n"
                        "    {0,1} degenerate\n"
                        "      {0} leaf\n"
                        "      {1} leaf\n"
                        "    {3} leaf\n"
                        "  {2} leaf\n");
}

TEST_CASE("cli: query answers match the primitive operations") {
    CliResult shs = run({"query", "-", "shs", "0", "2"}, PAW);
    CHECK(shs.code == 0);
    CHECK(shs.out == "{\n  \"shs\": [\n    0,\n    1,\n    2,\n    3\n  ]\n}\n");

    CliResult mhs = run({"query", "-", "mhs", "3"}, PAW);
    CHECK(mhs.code == 0);
    CHECK(mhs.out ==
          "{\n  \"mhs\": [\n    [\n      0,\n      1\n    ],\n    [\n      2\n    ]\n  ]\n}\n");

    CliResult trivial = run({"query", "-", "trivial"}, PAW);
    CHECK(trivial.code == 0);
    CHECK(trivial.out == "{\n  \"trivial\": false\n}\n");
}

TEST_CASE("cli: check reports every requested family of checks") {
    CliResult result =
        run({"check", "-", "--axioms", "--closure", "--submodular", "--oracle"}, PAW);
    REQUIRE(result.code == 0);
    json doc = json::parse(result.out);
    CHECK(doc["all_hold"] == true);
    std::vector<std::string> names;
    for (const json &check : doc["checks"]) {
        names.push_back(check["axiom"].get<std::string>());
        CHECK(check["holds"] == true);
        CHECK(check["witness"].is_null());
    }
    CHECK(names == std::vector<std::string>{"base", "A1", "A2", "A3", "A4", "weakly_partitive",
                                            "partitive", "submodularity", "oracle"});
}

TEST_CASE("cli: a failing axiom check exits with status one") {
    CliResult result = run({"check", "-", "--axioms"}, TT3);
    CHECK(result.code == 1);
    json doc = json::parse(result.out);
    CHECK(doc["all_hold"] == false);
    CHECK(doc["checks"][1]["axiom"] == "A1");
    CHECK(doc["checks"][1]["holds"] == false);
    CHECK(doc["checks"][1]["witness"] == json::parse("[0, 2, 1]"));
    CHECK(doc["checks"][2]["holds"] == true);
    CHECK(doc["checks"][4]["holds"] == true);
}

TEST_CASE("cli: usage errors exit with status two") {
    CHECK(run({"decompose", "-", "--no-such-flag"}, PAW).code == 2);
    CHECK(run({"check", "-"}, PAW).code == 2);
    CHECK(run({"query", "-", "mhs", "1", "2"}, PAW).code == 2);
    CHECK(run({"query", "-", "shs"}, PAW).code == 2);
    CHECK(run({"query", "-", "trivial", "0"}, PAW).code == 2);
    CHECK(run({"decompose", "no_such_file.graph"}).code == 2);
    CHECK(run({"decompose", "-"}, "not a graph at all\n").code == 2);
    CHECK(run({"decompose", "-", "--type-nodes"}, BIPARTITE_STAR).code == 2);
    CHECK(run({"decompose", "-", "--kind", "distance"}, BIPARTITE_STAR).code == 2);
    CHECK(run({"query", "-", "trivial"}, BIPARTITE_STAR).code == 2);
    CHECK(run({"check", "-", "--axioms"}, BIPARTITE_STAR).code == 2);
    CHECK(run({"decompose", "-", "--kind", "distance"}, ORDERED_2STRUCTURE).code == 2);
    CHECK(run({"generate", "--model", "gnp", "--n", "0"}).code == 2);

    CliResult coloring = run({"decompose", "-"}, ORDERED_2STRUCTURE);
    CHECK(coloring.code == 2);
    CHECK(coloring.err ==
          "error: IncompleteColoring: pair {1,0} carries two different colors\n");
}

TEST_CASE("cli: pipeline failures exit with status three") {
    CliResult strict = run({"decompose", "-", "--type-nodes", "--strict"}, STAR_JSON);
    CHECK(strict.code == 3);
    CHECK(strict.out.empty());
    CHECK(strict.err.find("NotWeaklyPartitive") != std::string::npos);

    // Without --strict the same input decomposes, with the root left
    // unclassified.
    CliResult lax = run({"decompose", "-", "--type-nodes", "--format", "text"}, STAR_JSON);
    CHECK(lax.code == 0);
    CHECK(lax.out.find("{0,1,2,3} unclassified") == 0);

    std::string big = run({"generate", "--model", "gnp", "--n", "13", "--seed", "7"}).out;
    CHECK(run({"check", "-", "--closure"}, big).code == 3);

    std::string huge = run({"generate", "--model", "gnp", "--n", "21", "--seed", "7"}).out;
    CHECK(run({"oracle", "-", "--family", "homogeneous"}, huge).code == 3);

    // A bipartite instance whose bimodules are not union-closed is refused,
    // with the witness pair spelled out.
    std::string violating =
        run({"generate", "--model", "bipartite", "--n", "6", "--p", "0.5", "--seed", "3"}).out;
    CliResult refused = run({"decompose", "-"}, violating);
    CHECK(refused.code == 3);
    CHECK(refused.err.find("{0,1}") != std::string::npos);
    CHECK(refused.err.find("{1,2}") != std::string::npos);
}

TEST_CASE("cli: generate is deterministic and feeds the other commands") {
    std::vector<std::string> args = {"generate", "--model", "gnp",
                                     "--n",      "8",       "--p",
                                     "0.4",      "--seed",  "11"};
    CliResult first = run(args);
    CHECK(first.code == 0);
    CHECK(run(args).out == first.out);
    CHECK(run({"generate", "--model", "gnp", "--n", "8", "--p", "0.4", "--seed", "12"}).out !=
          first.out);

    CHECK(run({"decompose", "-"}, first.out).code == 0);
    CHECK(run({"check", "-", "--axioms", "--oracle"}, first.out).code == 0);

    for (const char *model : {"tournament", "bipartite", "2structure"})
        CHECK(run({"generate", "--model", model, "--n", "6", "--seed", "5"}).code == 0);
}

TEST_CASE("cli: thread count comes from the flag or the environment") {
    std::string graph = run({"generate", "--model", "gnp", "--n", "30", "--seed", "21"}).out;
    CliResult base = run({"decompose", "-"}, graph);
    CHECK(base.code == 0);
    CHECK(run({"decompose", "-", "--threads", "2"}, graph).out == base.out);

    setenv("HOMODEC_THREADS", "3", 1);
    CliResult via_env = run({"decompose", "-"}, graph);
    unsetenv("HOMODEC_THREADS");
    CHECK(via_env.out == base.out);
}

TEST_CASE("cli: oracle subcommand lists brute-force families") {
    CliResult homogeneous = run({"oracle", "-", "--family", "homogeneous"}, BIPARTITE_STAR);
    CHECK(homogeneous.code == 0);
    CHECK(json::parse(homogeneous.out) ==
          json::parse(R"({"family": [[0], [0,1], [0,1,2], [0,2], [1], [2]]})"));

    CliResult strong = run({"oracle", "-"}, BIPARTITE_STAR);
    CHECK(strong.code == 0);
    CHECK(json::parse(strong.out) == json::parse(R"({"family": [[0], [0,1,2], [1], [2]]})"));

    CliResult relation = run({"oracle", "-", "--family", "homogeneous"}, PAW);
    CHECK(relation.code == 0);
    CHECK(json::parse(relation.out)["family"].size() == 7);
}

TEST_CASE("cli: ordered two-structures decompose to a linear order") {
    CliResult result =
        run({"decompose", "-", "--type-nodes", "--format", "text", "--ordered"},
            ORDERED_2STRUCTURE);
    CHECK(result.code == 0);
    CHECK(result.out == "{0,1,2} linear order 0 2 1\n"
                        "  {0} leaf\n"
                        "  {1} leaf\n"
                        "  {2} leaf\n");
}

TEST_CASE("cli: output lands in the requested file") {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / "homodec_cli_out_test.json";
    CliResult result = run({"decompose", "-", "--out", path.string()}, PAW);
    CHECK(result.code == 0);
    CHECK(result.out.empty());
    std::ifstream file(path);
    std::ostringstream contents;
    contents << file.rdbuf();
    CHECK(contents.str() == run({"decompose", "-"}, PAW).out);
    std::remove(path.string().c_str());
}
