#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the installed CLI surface. The binary path comes
// from CIRCSTAB_CLI_BIN (set by ctest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("CIRCSTAB_CLI_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = env + " " + std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buffer;
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        r.out.append(buffer.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("classify emits one json object") {
    auto r = run("classify 10 1,2,8,9 --mode cross-check");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"n\":10,\"set\":\"10:1,2,8,9\",\"status\":\"nontrivially-unstable\","
          "\"reason\":\"condition-ii\",\"witness\":3,\"aut_order\":\"20\","
          "\"cover_aut_order\":\"80\",\"agreement\":true}\n");

    auto stable = run("classify 6 2,3,4 --mode cross-check");
    CHECK(stable.exit_code == 0);
    CHECK(stable.out.find("\"status\":\"stable\"") != std::string::npos);
}

TEST_CASE("validation errors exit with code 2") {
    CHECK(run("classify 6 1").exit_code == 2);        // asymmetric set
    CHECK(run("classify 6 0,3").exit_code == 2);      // 0 in S
    CHECK(run("survey --n 40 --all-sets").exit_code == 2);
}

TEST_CASE("budget exhaustion exits with code 4") {
    auto r = run("classify 26 1,2,24,25 --mode oracle", "CIRCSTAB_NODE_BUDGET=3");
    CHECK(r.exit_code == 4);
    // parallel surveys propagate the budget abort instead of crashing
    auto s = run("survey --n 14 --all-sets --parallel 4 --mode oracle", "CIRCSTAB_NODE_BUDGET=3");
    CHECK(s.exit_code == 4);
}

TEST_CASE("survey output is deterministic and ordered by encoding") {
    auto a = run("survey --n 10 --all-sets --mode cross-check");
    auto b = run("survey --n 10 --all-sets --mode cross-check --parallel 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"set\":\"10:1,2,8,9\"") != std::string::npos);

    auto s1 = run("survey --n 22 --sample 30 --seed 9 --parallel 2");
    auto s2 = run("survey --n 22 --sample 30 --seed 9 --parallel 8");
    CHECK(s1.out == s2.out);
}

TEST_CASE("verify suite runs clean") {
    auto r = run("verify --suite cohomology");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("suite cohomology: OK") != std::string::npos);
}

TEST_CASE("conjecture probe stays anomaly-free on square-free moduli") {
    auto r = run("conjecture-probe --n 10 --n 14");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());  // anomalies only on stdout; none expected
}

TEST_CASE("h1 accepts a user-supplied group spec") {
    std::string path = "/tmp/circstab_cli_test_group.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"degree\":5,\"generators\":[[1,2,3,4,0],[1,0,2,3,4]]}\n", f);
        fclose(f);
    }
    auto r = run("h1 --group " + path + " --scan");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"dim_h1\":1") != std::string::npos);
    CHECK(r.out.find("\"order\":120") != std::string::npos);
    CHECK(r.out.find("\"g0_order\":60") != std::string::npos);
    CHECK(run("h1 --group /nonexistent.json").exit_code == 2);
}
