#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "lnflag/hopf.hpp"
#include "lnflag/io.hpp"

using namespace lnflag;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LNFLAG_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("coproduct record round trip") {
    RunResult r = run_cli("coproduct --monomial 0,1 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json record = nlohmann::json::parse(r.out);
    CHECK(record["operation"] == "coproduct");
    CHECK(record["status"] == "ok");
    CHECK(tensor_from_json(record["result"]) == coproduct(GPoly::generator(2)));
}

TEST_CASE("text output of worked examples") {
    CHECK(run_cli("coproduct --monomial 0,1").out ==
          "delta(b^(0,1)) = 1 (x) b2 + 2 b1 (x) b1 + b2 (x) 1\n");
    CHECK(run_cli("act --side right --op 1 --subset 1,2,4 --ambient 4").out ==
          "2 g1^2 + g2\n");
    CHECK(run_cli("antipode --monomial 0,1").out == "chi(b^(0,1)) = 2 b1^2 - b2\n");
    CHECK(run_cli("char-number --subset 1,2 --ambient 2 --left 1").out == "2 g1\n");
    CHECK(run_cli("geom --what act-right --subset 1,2,4 --ambient 4 --op 1").out ==
          "2 g1^2 + g2\n");
}

TEST_CASE("tables") {
    RunResult lambda4 = run_cli("tables --what lambda --grading 4");
    CHECK(lambda4.exit_code == 0);
    CHECK(lambda4.out == "psi=(2): 1 1\npsi=(0,1): 0 -1\n");

    RunResult push2 = run_cli("tables --what pushforward --n 2");
    CHECK(push2.exit_code == 0);
    CHECK(push2.out ==
          "pi_!(x^{}) = g2\npi_!(x^{1}) = g1\npi_!(x^{2}) = g1\npi_!(x^{1,2}) = 1\n");

    RunResult cop1 = run_cli("tables --what coproduct --max-n 1");
    CHECK(cop1.exit_code == 0);
    CHECK(cop1.out == "delta(b_1) = 1 (x) b1 + b1 (x) 1\n");
}

TEST_CASE("identical invocations emit identical bytes") {
    const std::string cmd = "verify --suite goldens --json";
    RunResult a = run_cli(cmd), b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    // every emitted record parses back
    std::stringstream ss(a.out);
    std::string line;
    int parsed = 0;
    while (std::getline(ss, line)) {
        nlohmann::json record = nlohmann::json::parse(line);
        CHECK(record.contains("operation"));
        CHECK(record.contains("input"));
        CHECK(record.contains("status"));
        ++parsed;
    }
    CHECK(parsed > 0);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify --suite hopf --max-grading 16").exit_code == 0);
    CHECK(run_cli("verify --suite ring --trials 100").exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("coproduct").exit_code == 2);
    CHECK(run_cli("coproduct --monomial 1,x").exit_code == 2);
    CHECK(run_cli("act --side sideways --op 1 --monomial 1").exit_code == 2);
    CHECK(run_cli("char-number --subset 2,1 --ambient 4").exit_code == 2);
    CHECK(run_cli("verify --suite hopf --max-grading 100").exit_code == 2);
    CHECK(run_cli("tables --what pushforward --n 25").exit_code == 2);
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
}
