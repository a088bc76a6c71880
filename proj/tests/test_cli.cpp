// Exercises the CLI binary as a subprocess: exit codes and output formats
// are part of the external contract.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
    const std::string cmd = std::string(APPELL_CLI_PATH) + " " + args + " > " + path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    res.output = buf.str();
    std::remove(path.c_str());
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// Blanks the micros column: timing is the one field that legitimately varies
// between otherwise identical runs.
std::string strip_csv_micros(const std::string& text) {
    std::string out;
    for (const std::string& line : lines_of(text)) {
        const auto comma = line.rfind(',');
        out += line.substr(0, comma);
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("table subcommand") {
    const RunResult bern = run_cli("table bernoulli --n 4");
    CHECK(bern.exit_code == 0);
    const auto bern_lines = lines_of(bern.output);
    REQUIRE(bern_lines.size() == 5);
    CHECK(bern_lines.front() == "0 1");
    CHECK(bern_lines.back() == "4 -1/30");

    const RunResult stir = run_cli("table stirling --n 4");
    CHECK(stir.exit_code == 0);
    CHECK(stir.output.find("4 2 7\n") != std::string::npos);

    const RunResult sy = run_cli("table stirling-y --rv uniform01 --n 2 --r 1");
    CHECK(sy.exit_code == 0);
    CHECK(lines_of(sy.output) == std::vector<std::string>{"1/3"});

    const RunResult poly = run_cli("table euler --n 3 --poly 3");
    CHECK(poly.exit_code == 0);
    // E_3(x) = x^3 - 3/2 x^2 + 1/4
    CHECK(lines_of(poly.output) ==
          std::vector<std::string>{"0 1/4", "1 0", "2 -3/2", "3 1"});

    CHECK(run_cli("table hermite --n 4").exit_code == 2);
    CHECK(run_cli("table bernoulli --n 4 --poly 9").exit_code == 2);
}

TEST_CASE("verify subcommand passes on true identities") {
    const RunResult th4 = run_cli("verify theorem4 --m 2 --n-max 8 --slots uniform01,uniform01 --w 1,1");
    CHECK(th4.exit_code == 0);
    CHECK(lines_of(th4.output).size() == 10);  // header + n = 0..8

    const RunResult nor = run_cli("verify norlund --n-max 10");
    CHECK(nor.exit_code == 0);
    CHECK(nor.output.find("printed_matches=false") != std::string::npos);

    const RunResult c43 = run_cli("verify corollary43 --alpha 1,2 --n-max 6 --x 1/2");
    CHECK(c43.exit_code == 0);

    const RunResult th5 = run_cli("verify theorem5 --m 2 --n-max 5 --rv normal --format jsonl");
    CHECK(th5.exit_code == 0);
    CHECK(lines_of(th5.output).size() == 6);
    CHECK(th5.output.find("\"equal\":true") != std::string::npos);
    CHECK(th5.output.find("\"equal\":false") == std::string::npos);

    const RunResult chu = run_cli("verify chu-vandermonde --t 1/2,1/2 --n-max 6");
    CHECK(chu.exit_code == 0);
}

TEST_CASE("verify output is reproducible for a fixed spec") {
    const std::string spec = "verify theorem5 --m 2 --n-max 4 --alpha 1,1 --seed 99";
    const RunResult a = run_cli(spec);
    const RunResult b = run_cli(spec);
    CHECK(a.exit_code == 0);
    CHECK(strip_csv_micros(a.output) == strip_csv_micros(b.output));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify theorem4 --m 2").exit_code == 2);             // missing --w
    CHECK(run_cli("verify unknown-identity --n-max 3").exit_code == 2);
    CHECK(run_cli("verify theorem5 --m 2 --w 1,1 --alpha 1,1").exit_code == 2);
    CHECK(run_cli("verify theorem5 --m 2 --rv poisson").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("verify corollary43 --alpha 1,2 --format yaml").exit_code == 2);
}

TEST_CASE("selftest subcommand") {
    const RunResult quick = run_cli("selftest --quick");
    CHECK(quick.exit_code == 0);
    CHECK(quick.output.find("all criteria passed") != std::string::npos);

    const RunResult fault = run_cli("selftest --quick --inject-fault");
    CHECK(fault.exit_code == 1);
    CHECK(fault.output.find("FAIL") != std::string::npos);
}
