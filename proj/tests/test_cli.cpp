#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "ddg/graph.hpp"
#include "ddg/graph6.hpp"

using namespace ddg;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the binary through /bin/sh, capturing stdout; stderr is discarded.
// An env prefix like "DDGLAB_THREADS=3" lands before the binary path.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += std::string(DDGLAB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    for (const char c : text) {
        if (c == '\n') {
            if (!line.empty()) lines.push_back(line);
            line.clear();
        } else {
            line += c;
        }
    }
    if (!line.empty()) lines.push_back(line);
    return lines;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

}  // namespace

TEST_CASE("gen and verify round-trip through files") {
    const std::string out = temp_file("ddglab_cli_gamma2.g6").string();
    const RunResult gen = run_cli("gen --family gamma2 --t 1 --out " + out);
    CHECK(gen.code == 0);

    const std::vector<std::string> graph_lines = lines_of(read_file(out));
    REQUIRE(graph_lines.size() == 1);
    CHECK(graph6_decode(graph_lines[0]).size() == 8);

    const json sidecar = json::parse(read_file(out + ".json"));
    REQUIRE(sidecar.is_array());
    REQUIRE(sidecar.size() == 1);
    CHECK(sidecar[0]["line"] == 1);
    CHECK(sidecar[0]["family"] == "gamma2");
    CHECK(sidecar[0]["params"]["v"] == 8);
    CHECK(sidecar[0]["params"]["k"] == 4);

    const RunResult verify = run_cli("verify --in " + out);
    CHECK(verify.code == 0);
    const std::vector<std::string> reports = lines_of(verify.out);
    REQUIRE(reports.size() == 1);
    const json report = json::parse(reports[0]);
    CHECK(report["ddg"] == true);
    CHECK(report["proper"] == true);
    CHECK(report["params"] == json({{"v", 8},
                                    {"k", 4},
                                    {"lambda1", 0},
                                    {"lambda2", 2},
                                    {"m", 4},
                                    {"n", 2}}));
    CHECK(report["diameter"] == 2);
}

TEST_CASE("gen covers every family token") {
    struct Row {
        std::string args;
        int vertices;
    };
    // one instance per family; vertex count pins the right construction
    const std::vector<Row> rows = {
        {"gen --family gamma --t 1", 24},
        {"gen --family gamma1 --t 1", 8},
        {"gen --family gamma2 --t 2", 32},
        {"gen --family construction1 --design fano", 14},
        {"gen --family construction1 --design complete:4", 8},
        {"gen --family construction2 --srg lattice --q 4 --n 3", 48},
        {"gen --family construction3 --m 3 --n 4 --ingredient matching", 12},
        {"gen --family construction3 --m 3 --n 4 --ingredient coclique", 12},
        {"gen --family construction4 --srg petersen", 20},
        {"gen --family construction5 --srg petersen", 20},
        {"gen --family construction6 --t 1", 24},
        {"gen --family petersen", 10},
        {"gen --family paley --q 13", 13},
        {"gen --family lattice --n 3", 9},
        {"gen --family lattice-complement --n 4", 16},
        {"gen --family triangular --n 5", 10},
    };
    for (const Row& row : rows) {
        CAPTURE(row.args);
        const RunResult r = run_cli(row.args);
        CHECK(r.code == 0);
        const std::vector<std::string> graphs = lines_of(r.out);
        REQUIRE(graphs.size() == 1);
        CHECK(graph6_decode(graphs[0]).size() == row.vertices);
    }

    SUBCASE("every construction output re-verifies") {
        for (const Row& row : rows) {
            // the named strongly regular graphs are ingredients, not outputs
            if (row.args.find("construction") == std::string::npos &&
                row.args.find("gamma") == std::string::npos)
                continue;
            CAPTURE(row.args);
            const std::string out = temp_file("ddglab_cli_roundtrip.g6").string();
            REQUIRE(run_cli(row.args + " --out " + out).code == 0);
            const RunResult verify = run_cli("verify --in " + out);
            const json report = json::parse(lines_of(verify.out).at(0));
            CHECK(report["ddg"] == true);
            CHECK(verify.code == 0);
        }
    }

    SUBCASE("json format emits adjacency dumps") {
        const RunResult r = run_cli("gen --family gamma2 --t 1 --format json");
        CHECK(r.code == 0);
        const json dump = json::parse(lines_of(r.out).at(0));
        CHECK(dump["n"] == 8);
        CHECK(dump["rows"].size() == 8);
    }

    SUBCASE("a switching family may produce no graphs") {
        const std::string out = temp_file("ddglab_cli_empty.g6").string();
        const RunResult r = run_cli("gen --family construction5 --srg triangular --n 5 --out " + out);
        CHECK(r.code == 0);
        CHECK(lines_of(read_file(out)).empty());
        CHECK(json::parse(read_file(out + ".json")).empty());
    }
}

TEST_CASE("kappa reports connectivity with a certificate") {
    const std::string out = temp_file("ddglab_cli_gamma1.g6").string();
    REQUIRE(run_cli("gen --family gamma --t 1 --out " + out).code == 0);

    const RunResult r = run_cli("kappa --in " + out);
    CHECK(r.code == 0);
    const json report = json::parse(lines_of(r.out).at(0));
    CHECK(report["kappa"] == 8);
    CHECK(report["method"] == "maxflow");
    CHECK(report["cut"].size() == 8);

    SUBCASE("thread count comes from the flag or the environment") {
        const json flagged = json::parse(lines_of(run_cli("kappa --threads 3 --in " + out).out).at(0));
        const json from_env =
            json::parse(lines_of(run_cli("kappa --in " + out, "DDGLAB_THREADS=3").out).at(0));
        CHECK(flagged["kappa"] == 8);
        CHECK(from_env["kappa"] == 8);
        CHECK(flagged["cut"] == report["cut"]);
        CHECK(from_env["cut"] == report["cut"]);
    }
}

TEST_CASE("switch enumerates Seidel automorphisms and streams the switches") {
    SUBCASE("a graph with no Seidel automorphism still succeeds") {
        const RunResult r = run_cli("switch --srg triangular --n 5");
        CHECK(r.code == 0);
        const std::vector<std::string> out = lines_of(r.out);
        REQUIRE(out.size() == 1);  // report only, no graphs
        const json report = json::parse(out[0]);
        CHECK(report["seidel_automorphisms"] == 0);
        CHECK(report["outputs"] == 0);
        CHECK(report["vertices"] == 10);
    }
    SUBCASE("switched graphs land in the output file") {
        const std::string out = temp_file("ddglab_cli_switch.g6").string();
        const RunResult r = run_cli("switch --srg lattice --n 3 --out " + out);
        CHECK(r.code == 0);
        const json report = json::parse(lines_of(r.out).at(0));
        CHECK(report["seidel_automorphisms"] == 6);
        CHECK(report["outputs"] == 6);
        const std::vector<std::string> graphs = lines_of(read_file(out));
        REQUIRE(graphs.size() == 6);
        for (const std::string& line : graphs) CHECK(graph6_decode(line).size() == 9);
    }
    SUBCASE("without --out the graphs precede the report on stdout") {
        const RunResult r = run_cli("switch --srg lattice --n 3");
        CHECK(r.code == 0);
        const std::vector<std::string> out = lines_of(r.out);
        REQUIRE(out.size() == 7);
        for (std::size_t i = 0; i + 1 < out.size(); ++i)
            CHECK(graph6_decode(out[i]).size() == 9);
        CHECK(json::parse(out.back())["outputs"] == 6);
    }
}

TEST_CASE("exit codes follow the contract") {
    SUBCASE("usage errors exit 2") {
        CHECK(run_cli("gen --family paley --q 14").code == 2);
        CHECK(run_cli("gen --family nosuch").code == 2);
        CHECK(run_cli("gen").code == 2);  // --family missing
        CHECK(run_cli("nosuchcommand").code == 2);
        CHECK(run_cli("verify --in /nonexistent/path.g6").code == 2);
        CHECK(run_cli("gen --family construction3 --m 3 --n 5 --ingredient matching").code == 2);
        CHECK(run_cli("gen --family construction2 --srg petersen --n 3").code == 2);
        CHECK(run_cli("gen --family gamma2 --t 1 --format yaml").code == 2);
    }
    SUBCASE("verify exits 1 when a graph fails the check") {
        const std::string out = temp_file("ddglab_cli_path4.g6").string();
        std::ofstream file(out);
        file << graph6_encode(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) << '\n';
        file.close();
        const RunResult r = run_cli("verify --in " + out);
        CHECK(r.code == 1);
        const json report = json::parse(lines_of(r.out).at(0));
        CHECK(report["ddg"] == false);
    }
    SUBCASE("help exits 0") {
        CHECK(run_cli("--help").code == 0);
        CHECK(run_cli("gen --help").code == 0);
    }
}

TEST_CASE("reproduce prints an all-pass table") {
    const RunResult r = run_cli("reproduce --threads 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("instance") != std::string::npos);
    CHECK(r.out.find("| PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    // every headline family appears
    for (const char* needle : {"gamma t=1 kappa", "gamma2 t=2 certificate", "petersen[K2] kappa",
                               "paley(17) seidel automorphisms", "block census t<=6"})
        CHECK(r.out.find(needle) != std::string::npos);
}
