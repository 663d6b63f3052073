#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "fsurg/surgery.hpp"

#ifndef FAREY_SURGERY_CLI_PATH
#error "FAREY_SURGERY_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// stderr folded into stdout so usage errors are visible in failures
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FAREY_SURGERY_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("omega subcommand") {
    RunResult r = run_cli("omega 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "omega(5/1) = 9; complexity = 9 (omega <= 12)"));

    r = run_cli("omega 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "omega(0/1) = 7; complexity = 7"));

    r = run_cli("omega 13/3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "omega(13/3) = 12"));

    r = run_cli("omega 20");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "upper bound only"));
}

TEST_CASE("omega rejects infinite and malformed slopes with exit 2") {
    CHECK(run_cli("omega inf").exit_code == 2);
    CHECK(run_cli("omega 1/0").exit_code == 2);
    CHECK(run_cli("omega x").exit_code == 2);
    CHECK(run_cli("omega").exit_code == 2);
    CHECK(run_cli("nonsense 1").exit_code == 2);
}

TEST_CASE("omega JSON round-trips and matches a recomputation") {
    RunResult r = run_cli("omega 13/3 --format json --explain");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    auto x = fsurg::SurgeryCoefficient::normalize(j["p"].get<fsurg::Int>(),
                                                  j["q"].get<fsurg::Int>());
    CHECK(fsurg::omega(x) == j["omega"].get<fsurg::Int>());
    CHECK(j["pipeline_vertices"].get<fsurg::Int>() == 12);
    CHECK(j.contains("cost_breakdown"));
}

TEST_CASE("cf subcommand") {
    RunResult r = run_cli("cf 13/3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "[4; 3]"));
    CHECK(contains(r.out, "S = 7"));
}

TEST_CASE("distance subcommand") {
    RunResult r = run_cli("distance 0,1,inf 3,4,inf");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");

    r = run_cli("distance 0,1,inf 0,1,inf");
    CHECK(r.out == "0\n");

    r = run_cli("distance 0,1,inf 0,1/2,1");
    CHECK(r.out == "1\n");

    CHECK(run_cli("distance 0,1,5/2 0,1,inf").exit_code == 2);
}

TEST_CASE("flip-path subcommand") {
    RunResult r = run_cli("flip-path 0,1,inf 2,3,inf");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "length 2"));
    CHECK(contains(r.out, "1,2,inf"));
}

TEST_CASE("enumerate counts and the census comparison") {
    RunResult r = run_cli("enumerate --max-omega 7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "5 slopes with omega <= 7"));
    CHECK(contains(r.out, "hyperbolic count = 0"));

    r = run_cli("enumerate --max-omega 9 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "p,q,omega,hyperbolic,z,d_m_0,d_v_0,d_v_z,"
                          "pipeline_vertices,complexity_claim"));
    CHECK(contains(r.out, "5,1,9,true,3,4,3,0,10,9"));

    r = run_cli("enumerate --max-omega 12 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["hyperbolic_count"].get<int>() == 36);
    CHECK(j["census_tally_at_12"].get<int>() == 46);
    CHECK(j["reports"].size() == 41);
    CHECK(j["audit"]["proven"].get<bool>());

    // recompute omega for every emitted row
    for (const auto& row : j["reports"]) {
        auto x = fsurg::SurgeryCoefficient::normalize(row["p"].get<fsurg::Int>(),
                                                      row["q"].get<fsurg::Int>());
        CHECK(fsurg::omega(x) == row["omega"].get<fsurg::Int>());
    }
}

TEST_CASE("verify subcommand passes") {
    RunResult ok = run_cli("verify --radius 6 --pairs 50");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "verify passed"));
}

TEST_CASE("verify exits 1 under an injected fault") {
    std::string cmd = "env FAREY_SURGERY_INJECT_FAULT=1 " +
                      std::string(FAREY_SURGERY_CLI_PATH) + " verify --radius 4";
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(contains(out, "verify FAILED"));
}

TEST_CASE("thread cap variable is honored") {
    std::string cmd = "env FAREY_SURGERY_THREADS=1 " +
                      std::string(FAREY_SURGERY_CLI_PATH) + " verify --radius 5";
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(contains(out, "1 threads"));
}
