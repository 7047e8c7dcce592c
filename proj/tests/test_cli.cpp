#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "framespec/hamiltonian.hpp"
#include "framespec/models.hpp"
#include "framespec/serialization.hpp"

using namespace framespec;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout; the binary path comes from the
// FRAMESPEC_BIN environment variable set by the test driver.
RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string binary() {
    const char* bin = std::getenv("FRAMESPEC_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FRAMESPEC_BIN must point at the command-line binary");
    return std::string("'") + bin + "'";
}

std::string write_fixture(const std::string& name, const std::string& content) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    out.close();
    return "'" + path.string() + "'";
}

}  // namespace

TEST_CASE("frame check reports the equiangular triple as Parseval") {
    const std::string fixture =
        write_fixture("framespec_cli_mercedes.json", frame_to_json(mercedes()).dump());
    const RunResult r = run(binary() + " frame check " + fixture);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["is_parseval"] == true);
    CHECK(j["count"] == 3);
    CHECK(j["excess"] == 1);
}

TEST_CASE("frame check exits with the input code on malformed JSON") {
    const std::string fixture = write_fixture("framespec_cli_bad.json", "{ not json");
    CHECK(run(binary() + " frame check " + fixture + " 2>/dev/null").exit_code == 1);
    CHECK(run(binary() + " frame check '/nonexistent/x.json' 2>/dev/null").exit_code == 1);
    CHECK(run(binary() + " frame bogus 2>/dev/null").exit_code == 1);
}

TEST_CASE("frame check exits with the domain code when the vectors do not span") {
    json j;
    j["dim"] = 2;
    j["vectors"] = json::array({json::array({json::array({1.0, 0.0}), json::array({0.0, 0.0})})});
    const std::string fixture = write_fixture("framespec_cli_nonframe.json", j.dump());
    CHECK(run(binary() + " frame check " + fixture + " 2>/dev/null").exit_code == 2);
}

TEST_CASE("frame dilate prints the constant complement Gram of the triple") {
    const std::string fixture =
        write_fixture("framespec_cli_mercedes2.json", frame_to_json(mercedes()).dump());
    const RunResult r = run(binary() + " frame dilate " + fixture);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["excess"] == 1);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            CHECK(std::abs(j["psi_gram"][a][b][0].get<double>() - 1.0 / 3.0) < 1e-10);
            CHECK(std::abs(j["psi_gram"][a][b][1].get<double>()) < 1e-10);
        }
}

TEST_CASE("ham connect prints the collapsed coefficients of the triple") {
    const std::string fixture = write_fixture(
        "framespec_cli_ham.json",
        hamiltonian_to_json(mercedes(), CoefficientSequence({1.0, 2.0, 3.0})).dump());
    const RunResult r = run(binary() + " ham connect " + fixture);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["tilde_E"].size() == 2);
    CHECK(std::abs(j["tilde_E"][0].get<double>() - (6.0 - std::sqrt(3.0)) / 3.0) < 1e-10);
    CHECK(std::abs(j["tilde_E"][1].get<double>() - (6.0 + std::sqrt(3.0)) / 3.0) < 1e-10);
}

TEST_CASE("ham certify accepts a collapsed coefficient and rejects a frame coefficient") {
    const std::string fixture = write_fixture(
        "framespec_cli_ham2.json",
        hamiltonian_to_json(mercedes(), CoefficientSequence({1.0, 2.0, 3.0})).dump());
    char mu[64];
    std::snprintf(mu, sizeof mu, "%.17g", (6.0 - std::sqrt(3.0)) / 3.0);
    const RunResult good = run(binary() + " ham certify " + fixture + " --mu " + mu);
    CHECK(good.exit_code == 0);
    CHECK(json::parse(good.out)["accepted"] == true);
    const RunResult bad = run(binary() + " ham certify " + fixture + " --mu 1.0");
    CHECK(bad.exit_code == 0);
    CHECK(json::parse(bad.out)["accepted"] == false);
}

TEST_CASE("secular casazza prints the interlacing roots") {
    const RunResult r = run(binary() + " secular casazza 0 1 2");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["roots"].size() == 2);
    CHECK(std::abs(j["roots"][0].get<double>() - (1.0 - 1.0 / std::sqrt(3.0))) < 1e-10);
    CHECK(std::abs(j["roots"][1].get<double>() - (1.0 + 1.0 / std::sqrt(3.0))) < 1e-10);
}

TEST_CASE("secular pair averages the pair through the mixing angle") {
    const RunResult r = run(binary() + " secular pair 1.0 3.0 0.78539816339744831");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["root"].get<double>() - 2.0) < 1e-9);
    CHECK(j["residual"].get<double>() < 1e-12);
}

TEST_CASE("reproduce emits a passing machine-readable report") {
    const RunResult r = run(binary() + " reproduce 4 --json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["example_id"] == 4);
    CHECK(j["pass"] == true);
    for (const json& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("json output is byte-deterministic across runs") {
    const std::string fixture = write_fixture(
        "framespec_cli_ham3.json",
        hamiltonian_to_json(mercedes(), CoefficientSequence({1.0, 2.0, 3.0})).dump());
    const RunResult a = run(binary() + " ham connect " + fixture + " --json");
    const RunResult b = run(binary() + " ham connect " + fixture + " --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // compact mode is a single line
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1);
}

TEST_CASE("the tolerance environment variable reaches the wrapped operation") {
    const std::string fixture =
        write_fixture("framespec_cli_mercedes3.json", frame_to_json(mercedes()).dump());
    const RunResult r = run("FRAMESPEC_TOL=0.5 " + binary() + " frame check " + fixture);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["tolerance_used"] == 0.5);
}
