// End-to-end tests of the picktool binary. The harness runs it through
// popen and inspects exit codes plus the JSON envelope on stdout.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using Json = nlohmann::json;

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PICKTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string writeTemp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/" + name;
    std::ofstream(path) << body;
    return path;
}

const char* kFeasible = R"({
  "domain": {"kind": "polydisk", "dim": 1},
  "space": "hardy",
  "nodes": [[[0.0, 0.0]], [[0.5, 0.0]]],
  "targets": [[0.0, 0.0], [0.25, 0.0]]
})";

const char* kInfeasible = R"({
  "domain": {"kind": "polydisk", "dim": 1},
  "space": "hardy",
  "nodes": [[[0.0, 0.0]], [[0.5, 0.0]]],
  "targets": [[0.0, 0.0], [0.9, 0.0]]
})";

}  // namespace

TEST_CASE("check: feasible disk instance exits 0 with a Schur chain") {
    auto path = writeTemp("cli_feasible.json", kFeasible);
    auto r = run("check " + path);
    CHECK(r.exitCode == 0);
    Json j = Json::parse(r.out);
    CHECK(j["tool"] == "picktool");
    CHECK(j["command"] == "check");
    CHECK(j["result"]["mode"] == "classical-disk");
    CHECK(j["result"]["feasible"] == true);
    CHECK(j["result"]["chain"]["steps"].size() == 2);
    CHECK(j.contains("timing_ms"));
}

TEST_CASE("check: infeasible disk instance exits 1") {
    auto path = writeTemp("cli_infeasible.json", kInfeasible);
    auto r = run("check " + path);
    CHECK(r.exitCode == 1);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["feasible"] == false);
    CHECK(j["result"]["lambda_min"].get<double>() == doctest::Approx(-0.4406).epsilon(1e-3));
}

TEST_CASE("solve emits the interpolant chain") {
    auto path = writeTemp("cli_feasible.json", kFeasible);
    auto r = run("solve " + path);
    CHECK(r.exitCode == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["feasible"] == true);
    // first Schur parameter is w1 = 0
    auto g = j["result"]["chain"]["steps"][0]["gamma"];
    CHECK(g[0].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("sweep is reproducible for a fixed seed") {
    auto path = writeTemp("cli_feasible.json", kFeasible);
    auto a = run("sweep " + path + " --samples 8 --seed 42");
    auto b = run("sweep " + path + " --samples 8 --seed 42");
    CHECK(a.exitCode == 0);
    Json ja = Json::parse(a.out), jb = Json::parse(b.out);
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    CHECK(ja == jb);
    CHECK(ja["result"]["samples"].size() == 9);  // f = 1 plus 8 sampled weights
}

TEST_CASE("sweep writes the CSV trace") {
    auto path = writeTemp("cli_feasible.json", kFeasible);
    std::string csv = "/tmp/cli_trace.csv";
    auto r = run("sweep " + path + " --samples 3 --seed 1 --csv " + csv);
    CHECK(r.exitCode == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "index,skipped,lambda_min,lambda_max,psd,drift,inconclusive");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 4);
    std::remove(csv.c_str());
}

TEST_CASE("certify finds a witness on infeasible data and exits 1") {
    auto path = writeTemp("cli_infeasible.json", kInfeasible);
    auto r = run("certify " + path + " --restarts 1 --seed 5");
    CHECK(r.exitCode == 1);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["status"] == "infeasible");
    CHECK(j["result"]["certificate"]["lambda_min"].get<double>() < -0.1);
}

TEST_CASE("kernel reports all three routes on the disk") {
    auto r = run("kernel --domain polydisk --dim 1 --z 0.5,0 --degree 30");
    CHECK(r.exitCode == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["closed_form"][0].get<double>() == doctest::Approx(4.0 / 3.0));
    CHECK(j["result"]["delta_closed_gram"].get<double>() < 1e-6);
    CHECK(j["result"]["delta_gram_cyclic"].get<double>() < 1e-8);
}

TEST_CASE("moments dumps a CSV table") {
    auto r = run("moments --domain polydisk --space bergman --dim 1 --maxdeg 2");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("provenance") != std::string::npos);
    CHECK(r.out.find("exact") != std::string::npos);
}

TEST_CASE("bad inputs exit 2") {
    CHECK(run("check /nonexistent.json").exitCode == 2);
    auto path = writeTemp("cli_invalid.json", R"({
      "domain": {"kind": "polydisk", "dim": 1},
      "space": "hardy",
      "nodes": [[[2.0, 0.0]]],
      "targets": [[0.0, 0.0]]
    })");
    CHECK(run("check " + path).exitCode == 2);
    auto malformed = writeTemp("cli_malformed.json", "{ nope");
    CHECK(run("check " + malformed).exitCode == 2);
}
