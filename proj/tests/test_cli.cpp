#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "defco/chordal.hpp"
#include "defco/cograph_dp.hpp"
#include "defco/graph.hpp"
#include "defco/io.hpp"
#include "defco/trivially_perfect.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace defco;
using namespace defco::testing;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DEFCO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "defco_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const fs::path path = temp_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace

TEST_CASE("solve: cograph yes with certificate") {
    const std::string file = write_temp("c4.col", to_dimacs(make_cycle(4)));
    const std::string cert = (temp_dir() / "c4.cert.json").string();
    const auto result = run_cli("solve " + file + " --chi 2 --delta 0 --out " + cert);
    CHECK(result.code == 0);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j["answer"] == "YES");
    CHECK(j["class"] == "cograph");
    CHECK(j["colors"].size() == 4);

    const auto verify = run_cli("verify " + file + " " + cert + " --chi 2 --delta 0");
    CHECK(verify.code == 0);
    CHECK(nlohmann::json::parse(verify.out)["valid"] == true);
}

TEST_CASE("solve: no answer exits 1") {
    const std::string file = write_temp("k7.col", to_dimacs(make_complete(7)));
    const auto result = run_cli("solve " + file + " --chi 2 --delta 2");
    CHECK(result.code == 1);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j["answer"] == "NO");
    CHECK(!j.contains("colors"));
}

TEST_CASE("solve: forced engine mismatch exits 66") {
    const std::string file = write_temp("p4.col", to_dimacs(make_path(4)));
    CHECK(run_cli("solve " + file + " --chi 2 --delta 1 --engine cograph").code == 66);
    CHECK(run_cli("solve " + file + " --chi 2 --delta 1 --engine trivially-perfect").code == 66);
    // P4 is chordal, so that engine accepts it
    CHECK(run_cli("solve " + file + " --chi 2 --delta 1 --engine chordal").code == 0);
}

TEST_CASE("solve: budget exhaustion exits 69") {
    const std::string file = write_temp("k9.col", to_dimacs(make_complete(9)));
    const auto result =
        run_cli("solve " + file + " --chi 3 --delta 2 --engine brute --budget 5");
    CHECK(result.code == 69);
}

TEST_CASE("oracle subcommand forces the brute engine") {
    const std::string file = write_temp("k4.col", to_dimacs(make_complete(4)));
    const auto result = run_cli("oracle " + file + " --chi 2 --delta 1");
    CHECK(result.code == 0);
    CHECK(nlohmann::json::parse(result.out)["class"] == "brute");
}

TEST_CASE("verify exit codes") {
    const std::string graph = write_temp("k3.col", to_dimacs(make_complete(3)));
    const std::string good =
        write_temp("k3.good.json", answer_json(1, 2, Coloring{1, 1, 1}).dump());
    CHECK(run_cli("verify " + graph + " " + good + " --chi 1 --delta 2").code == 0);
    CHECK(run_cli("verify " + graph + " " + good + " --chi 1 --delta 1").code == 1);

    const std::string short_file =
        write_temp("k3.short.json", answer_json(1, 2, Coloring{1, 1}).dump());
    CHECK(run_cli("verify " + graph + " " + short_file + " --chi 1 --delta 2").code == 65);
    CHECK(run_cli("verify " + graph + " missing.json --chi 1 --delta 2").code == 65);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run_cli("solve").code == 64);
    CHECK(run_cli("frobnicate x").code == 64);
    const std::string file = write_temp("k3b.col", to_dimacs(make_complete(3)));
    CHECK(run_cli("solve " + file + " --chi 0 --delta 0").code == 64);
    CHECK(run_cli("gen nosuch --n 5").code == 64);
}

TEST_CASE("parse errors exit 65") {
    const std::string file = write_temp("broken.col", "p edge 2 1\ne 1 5\n");
    CHECK(run_cli("solve " + file + " --chi 1 --delta 1").code == 65);
}

TEST_CASE("reduce sat writes instance files with the documented sizes") {
    const std::string cnf = write_temp("f.cnf", "p cnf 2 2\n1 2 -1 0\n-1 -2 1 0\n");
    const std::string prefix = (temp_dir() / "f.reduced").string();
    const auto result = run_cli("reduce sat " + cnf + " --delta 1 --out " + prefix);
    CHECK(result.code == 0);
    const auto stats = nlohmann::json::parse(result.out);
    CHECK(stats["vertices"] == 18);
    CHECK(stats["chi"] == 4);
    CHECK(stats["delta"] == 1);

    std::ifstream colf(prefix + ".col");
    REQUIRE(colf.good());
    const Graph g = parse_dimacs_graph(std::string(std::istreambuf_iterator<char>(colf), {}));
    CHECK(g.vertex_count() == 18);
    CHECK(recognize_split(g).has_value());

    std::ifstream metaf(prefix + ".json");
    REQUIRE(metaf.good());
    nlohmann::json meta;
    metaf >> meta;
    CHECK(meta["annotations"].size() == 18);

    CHECK(run_cli("reduce sat " + cnf + " --delta 0 --out " + prefix).code == 64);
}

TEST_CASE("reduce setsplit and 4part") {
    const std::string ss =
        write_temp("ss.json", R"({"universe":3,"sets":[[0,1,2],[0,1,2]]})");
    const std::string prefix1 = (temp_dir() / "ss.reduced").string();
    const auto r1 = run_cli("reduce setsplit " + ss + " --chi 2 --out " + prefix1);
    CHECK(r1.code == 0);
    const auto stats1 = nlohmann::json::parse(r1.out);
    CHECK(stats1["vertices"] == 23);
    CHECK(stats1["delta"] == 3);

    const std::string fp = write_temp(
        "fp.json",
        R"({"n":4,"target":10,"groups":[[1,1,1,1],[2,2,2,2],[3,3,3,3],[4,4,4,4]]})");
    const std::string prefix2 = (temp_dir() / "fp.reduced").string();
    const auto r2 = run_cli("reduce 4part " + fp + " --out " + prefix2);
    CHECK(r2.code == 0);
    const auto stats2 = nlohmann::json::parse(r2.out);
    CHECK(stats2["parts"] == 20);
    CHECK(stats2["chi"] == 4);
    CHECK(stats2["delta"] == 2007810);

    CHECK(run_cli("reduce nosuch " + ss).code == 64);
    CHECK(run_cli("reduce setsplit " + fp + " --chi 2").code == 65);
}

TEST_CASE("gen emits class members and is deterministic") {
    const auto a = run_cli("gen cograph --n 9 --seed 5");
    const auto b = run_cli("gen cograph --n 9 --seed 5");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // byte-identical
    CHECK(build_cotree(parse_dimacs_graph(a.out)).cotree.has_value());

    const auto tp = run_cli("gen tp --n 9 --seed 5");
    CHECK(build_rooted_forest(parse_dimacs_graph(tp.out)).forest.has_value());

    const auto chordal = run_cli("gen chordal --n 9 --seed 5");
    CHECK(peo_lexbfs(parse_dimacs_graph(chordal.out)).perfect);

    const auto split = run_cli("gen split --n 9 --seed 5");
    CHECK(recognize_split(parse_dimacs_graph(split.out)).has_value());
}

TEST_CASE("pipeline: every yes answer verifies") {
    int yes_seen = 0;
    for (const std::string cls : {"cograph", "tp", "chordal", "split"}) {
        for (int seed = 1; seed <= 3; ++seed) {
            const std::string file = (temp_dir() / (cls + std::to_string(seed) + ".col")).string();
            REQUIRE(run_cli("gen " + cls + " --n 8 --seed " + std::to_string(seed) +
                            " --out " + file)
                        .code == 0);
            const std::string cert = file + ".cert.json";
            const auto solved =
                run_cli("solve " + file + " --chi 2 --delta 1 --out " + cert);
            REQUIRE((solved.code == 0 || solved.code == 1));
            if (solved.code == 0) {
                ++yes_seen;
                CHECK(run_cli("verify " + file + " " + cert + " --chi 2 --delta 1").code == 0);
            }
        }
    }
    CHECK(yes_seen > 0);
}
