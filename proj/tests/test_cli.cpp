#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#ifndef BCERT_CLI_PATH
#error "BCERT_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BCERT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("version flag") {
    RunResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("bcert 1.0.0") != std::string::npos);
}

TEST_CASE("certify passes at the origin and emits parseable JSON") {
    RunResult r = run_cli("certify --n 35 --tail paper-d6 --tc 0");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["version"] == "1.0.0");
    CHECK(j["n"] == 35);
    CHECK(j["d"] == 6);
    CHECK(j["mode"] == "exact");
    CHECK(j["overall"] == "pass");
    CHECK(j["verdicts"]["discriminant_positive"] == true);
    CHECK(j["verdicts"]["iprime1_zero"] == true);
    CHECK(j["tail"].size() == 6);
    CHECK(j["tail"][0] == "-10");
}

TEST_CASE("certify output is byte-stable across runs") {
    RunResult a = run_cli("certify --n 35 --tail paper-d6 --tc 0");
    RunResult b = run_cli("certify --n 35 --tail paper-d6 --tc 0");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("certify CSV format") {
    RunResult r = run_cli("certify --n 35 --tail paper-d6 --tc 0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,d,discrim_sign,i1_sign,iprime1_zero,i2_sign,j1_sign,pass\n"
                      "35,6,+,+,1,-,-,1\n");
}

TEST_CASE("degree constraint violation exits with usage status") {
    RunResult r = run_cli("certify --n 30");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("n > 4d + 6") != std::string::npos);
}

TEST_CASE("decimal range parameter is rejected with a diagnostic") {
    RunResult r = run_cli("certify --n 35 --tail paper-d6 --tc -0.5");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("rational") != std::string::npos);
}

TEST_CASE("positive range parameter is rejected") {
    RunResult r = run_cli("certify --n 35 --tail paper-d6 --tc 1/10");
    CHECK(r.exit_code == 2);
}

TEST_CASE("unknown flags exit with usage status") {
    RunResult r = run_cli("certify --n 35 --no-such-flag");
    CHECK(r.exit_code == 2);
    RunResult r2 = run_cli("no-such-subcommand");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("interval certify over a small negative range") {
    RunResult r = run_cli("certify --n 35 --tail paper-d6 --tc-lo -1/4096 --tc-hi 0");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["mode"] == "interval");
    CHECK(j["overall"] == "pass");
    CHECK(j["tc_lo"] == "-1/4096");
    CHECK(j["tc_hi"] == "0");
}

TEST_CASE("table renders one CSV row per dimension") {
    RunResult r = run_cli("table --n-min 35 --n-max 62 --tail paper-d6 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 29);  // header + 28 dimensions
    CHECK(r.output.rfind("n,d,discrim_sign", 0) == 0);
    CHECK(r.output.find("\n35,6,+,+,1,-,-,1\n") != std::string::npos);
    CHECK(r.output.find("\n62,6,+,+,1,-,-,1\n") != std::string::npos);
}

TEST_CASE("table JSON is an array of certificates") {
    RunResult r = run_cli("table --n-min 35 --n-max 37 --tail paper-d6 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[0]["n"] == 35);
    CHECK(j[2]["n"] == 37);
    for (const auto& cert : j) CHECK(cert["overall"] == "pass");
}

TEST_CASE("table propagates failures through the exit code") {
    // all-positive tail fails certification at every dimension
    std::string path = "/tmp/bcert_cli_test_tail.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("1 1 1 1 1 1\n", f);
        fclose(f);
    }
    RunResult r = run_cli("table --n-min 35 --n-max 36 --tail " + path + " --format csv");
    CHECK(r.exit_code == 1);
    remove(path.c_str());
}

TEST_CASE("tail files accept comma or whitespace separated rationals") {
    std::string path = "/tmp/bcert_cli_test_tail2.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("-10, 1/10000, -1/1000\n184/1000 -265/10000 737/1000000\n", f);
        fclose(f);
    }
    RunResult file_run = run_cli("certify --n 35 --tail " + path + " --tc 0");
    RunResult builtin_run = run_cli("certify --n 35 --tail paper-d6 --tc 0");
    CHECK(file_run.exit_code == 0);
    CHECK(file_run.output == builtin_run.output);
    remove(path.c_str());
}

TEST_CASE("chenwu-d1 built-in tail") {
    RunResult r = run_cli("certify --n 62 --tail chenwu-d1 --tc 0");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["d"] == 1);
    CHECK(j["tail"][0] == "-1");
    CHECK(j["overall"] == "pass");
}

TEST_CASE("search subcommand emits a deterministic report") {
    RunResult a = run_cli("search --d 6 --n 35 --budget 300 --seed 11");
    RunResult b = run_cli("search --d 6 --n 35 --budget 300 --seed 11");
    CHECK(a.output == b.output);
    CHECK((a.exit_code == 0 || a.exit_code == 1));
    nlohmann::json j = nlohmann::json::parse(a.output);
    CHECK(j["parameters"]["budget"] == 300);
    CHECK(j["candidates"].is_array());
}

TEST_CASE("bubble-check subcommand") {
    RunResult r = run_cli("bubble-check --n 35 --tc -1/10");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j["checks"].is_array());
    CHECK(j["checks"].size() == 6);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("missing required arguments exit with usage status") {
    RunResult r = run_cli("certify");
    CHECK(r.exit_code == 2);
    RunResult r2 = run_cli("");
    CHECK(r2.exit_code == 2);
}

}  // TEST_SUITE
