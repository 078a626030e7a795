#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <random>

#include "json.hpp"
#include "proc_util.hpp"
#include "riordan/oeis.hpp"

using namespace riordan;
using namespace riordan::testing;
namespace fs = std::filesystem;

namespace {

const std::string kBin = RIORDAN_CLI_PATH;

std::string q(const std::string& s) { return "'" + s + "'"; }

} // namespace

TEST_CASE("riordan matrix reproduces the worked example") {
    ProcResult r = run_cmd(kBin + " riordan matrix " + q("1/(1-x)^2") + " " + q("x*(1+x)") +
                           " --order 5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n2,1\n3,3,1\n4,5,4,1\n5,7,8,5,1\n6,9,12,12,6,1\n");
}

TEST_CASE("binomial matrix and identity") {
    ProcResult r = run_cmd(kBin + " riordan matrix " + q("1/(1-x)") + " " + q("x/(1-x)") +
                           " --order 4 --format table");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1 1\n1 2 1\n1 3 3 1\n1 4 6 4 1\n");

    ProcResult i = run_cmd(kBin + " riordan matrix 1 x --order 2 --format csv");
    CHECK(i.output == "1\n0,1\n0,0,1\n");
}

TEST_CASE("catalan inverse through the CLI") {
    ProcResult r = run_cmd(kBin + " riordan inv " + q("1-x") + " " + q("x*(1-x)") +
                           " --order 7 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1,1,2,5,14,42,132,429\n0,1,1,2,5,14,42,132\n");
}

TEST_CASE("series eval formats") {
    ProcResult t = run_cmd(kBin + " series eval " + q("rev(x*(1-x))") + " --order 7");
    CHECK(t.exit_code == 0);
    CHECK(t.output == "0 1 1 2 5 14 42 132\n");

    ProcResult j = run_cmd(kBin + " series eval " + q("1/(1-x)") + " --order 3 --format json");
    CHECK(j.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.output);
    CHECK(doc["order"] == 3);
    CHECK(doc["coeffs"] == nlohmann::json::array({"1", "1", "1", "1"}));
}

TEST_CASE("lie subcommands") {
    ProcResult e = run_cmd(kBin + " lie exp x x --order 4 --format csv");
    CHECK(e.exit_code == 0);
    CHECK(e.output == "1\n1,1\n1,2,1\n1,3,3,1\n1,4,6,4,1\n");

    ProcResult l = run_cmd(kBin + " lie log " + q("1/(1-x)") + " " + q("x/(1-x)") +
                           " --order 4 --format csv");
    CHECK(l.exit_code == 0);
    CHECK(l.output == "0\n1,0\n0,2,0\n0,0,3,0\n0,0,0,4,0\n");
}

TEST_CASE("hopf subcommands") {
    ProcResult d = run_cmd(kBin + " hopf delta H1 a2");
    CHECK(d.exit_code == 0);
    CHECK(d.output == "a2⊗1 + 2·a1⊗a1 + 1⊗a2\n");

    ProcResult a = run_cmd(kBin + " hopf antipode H0 b2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == "b1^2 - b2\n");

    ProcResult v = run_cmd(kBin + " hopf verify --family both --degree 8");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("FAIL") == std::string::npos);
    CHECK(v.output.find("H0 coassociativity degree 8: PASS") != std::string::npos);
    CHECK(v.output.find("H1 antipode degree 8: PASS") != std::string::npos);
    CHECK(v.output.find("H0 cocommutative through degree 8: yes") != std::string::npos);
    CHECK(v.output.find("H1 cocommutative through degree 8: no (witness at degree 3)") !=
          std::string::npos);
    // 2 families x (3 axioms x 8 degrees + 1 cocommutativity line)
    CHECK(std::count(v.output.begin(), v.output.end(), '\n') == 50);

    ProcResult vj = run_cmd(kBin + " hopf verify --family H1 --degree 3 --format json");
    CHECK(vj.exit_code == 0);
    nlohmann::json rows = nlohmann::json::parse(vj.output);
    REQUIRE(rows.is_array());
    CHECK(rows.size() == 10); // 3 axioms x 3 degrees + cocommutativity line
    for (const auto& row : rows)
        if (row["axiom"] != "cocommutative") CHECK(row["pass"] == true);
}

TEST_CASE("riordan mul through the CLI") {
    ProcResult r = run_cmd(kBin + " riordan mul " + q("1/(1-2*x)") + " " + q("x/(1-2*x)") + " " +
                           q("1/(1-3*x)") + " " + q("x/(1-3*x)") + " --order 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1,5,25,125,625\n0,1,5,25,125\n");
}

TEST_CASE("exit code contract") {
    // parse errors: bad expression syntax, bad usage
    CHECK(run_cmd(kBin + " series eval " + q("1+")).exit_code == 2);
    CHECK(run_cmd(kBin + " series eval " + q("foo(x)")).exit_code == 2);
    CHECK(run_cmd(kBin + " nonsense").exit_code == 2);
    CHECK(run_cmd(kBin + " riordan matrix onlyone").exit_code == 2);

    // validation errors: invalid pair, bad family, short OEIS query
    CHECK(run_cmd(kBin + " riordan matrix x x --order 4").exit_code == 3);
    CHECK(run_cmd(kBin + " riordan matrix 1 " + q("x^2") + " --order 4").exit_code == 3);
    CHECK(run_cmd(kBin + " hopf delta H2 a1").exit_code == 3);
    CHECK(run_cmd(kBin + " hopf delta H0 a1").exit_code == 3);
    CHECK(run_cmd(kBin + " hopf delta H1 a9 --hopf-degree 8").exit_code == 3);
    CHECK(run_cmd(kBin + " oeis lookup 1 2 3").exit_code == 3);
    CHECK(run_cmd(kBin + " lie exp " + q("1+x") + " x --order 4").exit_code == 3);

    // math-domain errors: non-series quotient, log of a non-unipotent matrix
    CHECK(run_cmd(kBin + " series eval " + q("1/x")).exit_code == 4);
    CHECK(run_cmd(kBin + " series eval " + q("rev(1+x)")).exit_code == 4);
    CHECK(run_cmd(kBin + " lie log 2 x --order 4").exit_code == 4);

    // network-class errors: offline cache miss
    CHECK(run_cmd(kBin + " oeis lookup 1 1 2 5 14 42 --offline --oeis-cache-dir "
                  "/tmp/riordan-definitely-missing-cache").exit_code == 5);

    // help exits cleanly
    CHECK(run_cmd(kBin + " --help").exit_code == 0);
}

TEST_CASE("output is deterministic") {
    const std::string cmd = kBin + " riordan inv " + q("1/(1-x)") + " " + q("x*(1+x)") +
                            " --order 9 --format json";
    ProcResult a = run_cmd(cmd), b = run_cmd(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    ProcResult c = run_cmd(kBin + " hopf delta H1 a5 --format json");
    ProcResult d = run_cmd(kBin + " hopf delta H1 a5 --format json");
    CHECK(c.output == d.output);
}

TEST_CASE("environment variables configure defaults, flags win") {
    ProcResult env = run_cmd("RIORDAN_ORDER=3 " + kBin + " series eval " + q("1/(1-x)") +
                             " --format csv");
    CHECK(env.output == "1,1,1,1\n");

    ProcResult flag = run_cmd("RIORDAN_ORDER=3 " + kBin + " series eval " + q("1/(1-x)") +
                              " --order 2 --format csv");
    CHECK(flag.output == "1,1,1\n");

    ProcResult fmt = run_cmd("RIORDAN_FORMAT=csv " + kBin + " series eval x --order 2");
    CHECK(fmt.output == "0,1,0\n");
}

TEST_CASE("offline OEIS lookup from a seeded cache") {
    std::mt19937_64 rng(std::random_device{}());
    fs::path dir = fs::temp_directory_path() / ("riordan-cli-oeis-" + std::to_string(rng()));
    fs::create_directories(dir);
    const std::vector<long long> seq{1, 1, 2, 5, 14, 42};
    fs::copy_file(fs::path(FIXTURE_DIR) / "oeis_catalan.json",
                  dir / (oeis_cache_key(seq) + ".json"));

    ProcResult r = run_cmd(kBin + " oeis lookup 1 1 2 5 14 42 --offline --oeis-cache-dir " +
                           dir.string() + " --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["from_cache"] == true);
    bool has_catalan = false;
    for (const auto& m : doc["matches"])
        if (m["a_number"] == "A000108") has_catalan = true;
    CHECK(has_catalan);

    fs::remove_all(dir);
}
