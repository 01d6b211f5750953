#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chordstats/exact.hpp"

#ifndef CHORDSTATS_CLI_PATH
#error "CHORDSTATS_CLI_PATH must point at the built binary"
#endif

using namespace chordstats;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string &args) {
    std::string command = std::string(CHORDSTATS_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> data_lines(const std::string &text) {
    std::vector<std::string> out;
    for (const std::string &line : lines_of(text))
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

std::string strip_timing(const std::string &text) {
    std::string out;
    for (const std::string &line : lines_of(text))
        if (line.rfind("# meta:timing_ms=", 0) != 0) out += line + "\n";
    return out;
}

} // namespace

TEST_CASE("count emits the printed row for n = 6") {
    RunResult res = run_cli("count --stat K --n 6");
    CHECK(res.exit_code == 0);
    auto rows = data_lines(res.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "p0,p1,p2,p3,p4,p5");
    CHECK(rows[1] == "13140,16470,16560,11160,4320,720");
}

TEST_CASE("single-cell count") {
    RunResult res = run_cli("count --stat G --n 6 --p 5");
    CHECK(res.exit_code == 0);
    auto rows = data_lines(res.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "120");
}

TEST_CASE("table output parses back to the exact rows") {
    RunResult res = run_cli("table --stat C --n-max 20");
    CHECK(res.exit_code == 0);
    auto rows = data_lines(res.output);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == "stat,n,p,count");
    std::size_t i = 1;
    for (int n = 1; n <= 20; ++n) {
        CountTable expected = exact::count_row(StatKind::Contained, n);
        for (int p = 0; p < n; ++p, ++i) {
            auto cells = split_csv(rows[i]);
            REQUIRE(cells.size() == 4);
            CHECK(cells[0] == "C");
            CHECK(cells[1] == std::to_string(n));
            CHECK(cells[2] == std::to_string(p));
            CHECK(Int(cells[3]) == expected.counts[p]);
        }
    }
    CHECK(i == rows.size());
}

TEST_CASE("moments renders exact rationals") {
    RunResult res = run_cli("moments --stat X --n 100 --m 1");
    CHECK(res.exit_code == 0);
    auto rows = data_lines(res.output);
    REQUIRE(rows.size() == 2);
    auto cells = split_csv(rows[1]);
    REQUIRE(cells.size() == 4);
    CHECK(cells[2] == "33");  // mean 99/3 in lowest terms
}

TEST_CASE("oracle reports agreement and exits cleanly") {
    RunResult res = run_cli("oracle --n 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("# meta:agreement=true") != std::string::npos);
    CHECK(res.output.find("# meta:partition_violations=0") != std::string::npos);
}

TEST_CASE("identical argv and seed give byte-identical output modulo timing") {
    RunResult a = run_cli("sample --n 5 --reps 2000 --seed 42");
    RunResult b = run_cli("sample --n 5 --reps 2000 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(strip_timing(a.output) == strip_timing(b.output));
    CHECK(a.output.find("# meta:rng_algorithm=splitmix64") != std::string::npos);
}

TEST_CASE("json format is well formed") {
    RunResult res = run_cli("dist --stat C --n 3 --normalize --format json");
    CHECK(res.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(res.output);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "dist");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["probability"] == "11/15");
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("count --stat K").exit_code == 1);            // missing --n
    CHECK(run_cli("count --stat Q --n 3").exit_code == 1);      // unknown statistic
    CHECK(run_cli("nonsense").exit_code == 1);                  // unknown subcommand
    CHECK(run_cli("count --stat K --n 3 --p 7").exit_code == 1);  // p out of range
    CHECK(run_cli("oracle --n 9").exit_code == 1);              // cap without override
}

TEST_CASE("recursion subcommand agrees with the direct route") {
    RunResult res = run_cli("recursion --n-max 12");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("# meta:agreement=true") != std::string::npos);
}

TEST_CASE("output matches the golden files byte for byte") {
    struct Golden {
        const char *args;
        const char *file;
    };
    for (const Golden &g : {Golden{"count --stat K --n 6", "count_K_n6.csv"},
                            Golden{"dist --stat C --n 3 --normalize", "dist_C_n3_normalize.csv"},
                            Golden{"asym --stat X --points 5 --cdf", "asym_X_points5_cdf.csv"}}) {
        CAPTURE(g.args);
        std::ifstream in(std::string(CHORDSTATS_TEST_DATA_DIR) + "/golden/" + g.file);
        REQUIRE(in.good());
        std::stringstream expected;
        expected << in.rdbuf();
        RunResult res = run_cli(g.args);
        CHECK(res.exit_code == 0);
        CHECK(strip_timing(res.output) == expected.str());
    }
}

TEST_CASE("asym emits the excluded cdf value at the critical point") {
    RunResult res = run_cli("asym --stat X --points 3 --cdf");
    CHECK(res.exit_code == 0);
    auto rows = data_lines(res.output);
    REQUIRE(rows.size() == 4);
    auto cells = split_csv(rows[2]);
    REQUIRE(cells.size() == 2);
    CHECK(std::stod(cells[1]) == doctest::Approx(0.7853981633974483).epsilon(1e-12));
}
