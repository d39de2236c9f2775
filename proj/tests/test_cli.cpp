#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    fs::path out = fs::temp_directory_path() / "quadgraph_cli_out.txt";
    std::string cmd = std::string(QUADGRAPH_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> /dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    fs::remove(out);
    return r;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify-all --n 3 --k 2 --q 4").exit_code == 2);  // even q
    CHECK(run_cli("verify-all --n 3 --k 3 --q 3").exit_code == 2);  // k >= n
    CHECK(run_cli("verify-all --n 3 --k 0 --q 3").exit_code == 2);
    CHECK(run_cli("stats --n 4 --k 1 --q 15").exit_code == 2);      // not a prime power
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("stats --k 1 --q 3").exit_code == 2);             // missing n
}

TEST_CASE("verify-all exit code contract") {
    // (4,2,3): every applicable claim passes (Lemma 4 instance)
    CHECK(run_cli("verify-all --n 4 --k 2 --q 3").exit_code == 0);
    // (4,1,3): the Table-1 degree band fails at q = 3 (ratio 4/3)
    CHECK(run_cli("verify-all --n 4 --k 1 --q 3").exit_code == 1);
}

TEST_CASE("build emits an edge list with a vertex table") {
    fs::path dir = fs::temp_directory_path() / "quadgraph_cli_test";
    fs::create_directories(dir);
    fs::path edges = dir / "g.edges";

    RunResult r = run_cli("build --n 4 --k 2 --q 3 --format edgelist -o " + edges.string());
    CHECK(r.exit_code == 0);

    std::ifstream ef(edges);
    REQUIRE(ef.good());
    size_t edge_lines = 0;
    std::string line;
    while (std::getline(ef, line))
        if (!line.empty()) ++edge_lines;
    CHECK(edge_lines == 0);  // K2-free instance

    std::ifstream vf(edges.string() + ".vertices");
    REQUIRE(vf.good());
    size_t vertex_lines = 0;
    while (std::getline(vf, line))
        if (!line.empty()) ++vertex_lines;
    CHECK(vertex_lines == 45);

    fs::remove_all(dir);
}

TEST_CASE("stats and spectrum emit JSON; dot export looks like DOT") {
    RunResult stats = run_cli("stats --n 4 --k 1 --q 3");
    CHECK(stats.exit_code == 0);
    CHECK(stats.output.find("\"vertices\": 15") != std::string::npos);
    CHECK(stats.output.find("\"regular\": true") != std::string::npos);

    RunResult spec = run_cli("spectrum --n 4 --k 1 --q 3");
    CHECK(spec.exit_code == 0);
    CHECK(spec.output.find("\"second_largest_abs\": 3.0") != std::string::npos);

    RunResult csv = run_cli("spectrum --n 4 --k 1 --q 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("index,eigenvalue", 0) == 0);

    RunResult dot = run_cli("build --n 4 --k 1 --q 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.rfind("graph quadgraph {", 0) == 0);
}

TEST_CASE("verify-identity and gap-test subcommands") {
    RunResult id = run_cli("verify-identity --n 4 --k 1 --q 3");
    CHECK(id.exit_code == 0);
    CHECK(id.output.find("\"transverse_exact\": true") != std::string::npos);

    RunResult gap = run_cli("gap-test --n 4 --k 1 --q 3 --trials 50 --seed 7");
    CHECK(gap.exit_code == 0);
    CHECK(gap.output.find("\"witnesses_found\": 50") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
    RunResult a = run_cli("verify-all --n 4 --k 2 --q 3 --seed 99");
    RunResult b = run_cli("verify-all --n 4 --k 2 --q 3 --seed 99");
    CHECK(a.output == b.output);

    RunResult e1 = run_cli("build --n 4 --k 1 --q 3 --format edgelist");
    RunResult e2 = run_cli("build --n 4 --k 1 --q 3 --format edgelist");
    CHECK(e1.output == e2.output);
}

TEST_CASE("cache dir via flag and environment") {
    fs::path dir = fs::temp_directory_path() / "quadgraph_cli_cache";
    fs::remove_all(dir);
    CHECK(run_cli("stats --n 4 --k 2 --q 3 --cache-dir " + dir.string()).exit_code == 0);
    bool has_file = fs::exists(dir) && !fs::is_empty(dir);
    CHECK(has_file);

    fs::remove_all(dir);
    std::string cmd = "QUADGRAPH_CACHE=" + dir.string() + " " + QUADGRAPH_CLI_PATH +
                      " stats --n 4 --k 2 --q 3 > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK((fs::exists(dir) && !fs::is_empty(dir)));
    fs::remove_all(dir);
}

TEST_CASE("extension field orders work end to end") {
    RunResult r = run_cli("stats --n 3 --k 1 --q 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"q\": 9") != std::string::npos);

    // explicit modulus override, t^2 + t + 2 over F_3
    RunResult m = run_cli("stats --n 3 --k 1 --q 9 --modulus 2,1,1");
    CHECK(m.exit_code == 0);

    // reducible modulus is a usage error
    CHECK(run_cli("stats --n 3 --k 1 --q 9 --modulus 2,0,1").exit_code == 2);
}
