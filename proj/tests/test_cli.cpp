// Exercises the built binary end to end: exit codes, JSON stream validity,
// and text/JSON agreement. The binary path arrives via QSU2_BIN.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qsu2/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string binary_path() {
    const char* env = std::getenv("QSU2_BIN");
    REQUIRE_MESSAGE(env != nullptr, "QSU2_BIN must point at the CLI binary");
    return env;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe))
        result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<nlohmann::json> parse_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(start, end - start);
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
        start = end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("exit code 0 on an all-pass suite") {
    const auto r = run_cli("verify --suite all --family modified --n 0 --q 1 --j1 1/2 --j2 1/2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("exit code 64 on usage errors") {
    CHECK(run_cli("verify --suite bogus").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("irrep --j 3/4").exit_code == 64);
}

TEST_CASE("exit code 2 on domain errors") {
    // clustered deltas make the fit matrix singular
    CHECK(run_cli("limit --j 1/2 --deltas 1e-3,1e-3,1e-3,1e-3").exit_code == 2);
    // q = i is a degenerate root of unity for the spin-1 ladder
    CHECK(run_cli("cg --family standard --q 1 --theta pi/2 --j1 1 --j2 1").exit_code == 2);
    // deformed Casimir diagonal hits [-1/2] at q = -1
    CHECK(run_cli("irrep --j 1/2 --q 1 --theta pi --deformed").exit_code == 2);
}

TEST_CASE("spin-0 irrep is the 1x1 zero representation") {
    const auto r = run_cli("irrep --j 0 --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["Jp"].size() == 1);
    CHECK(doc["Jp"][0][0]["re"].get<double>() == 0.0);
    CHECK(doc["J0"][0][0]["re"].get<double>() == 0.0);
    CHECK(doc["casimir"][0][0]["re"].get<double>() == 0.0);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("exit code 3 when no intertwiner exists") {
    // same coproduct: commutant solution exists
    CHECK(run_cli("intertwine --q 2 --n-source 0 --n-target 0 --j1 1/2 --j2 1/2").exit_code == 0);
    CHECK(run_cli("intertwine --q 2 --n-source 1 --n-target 0").exit_code == 0);
    // different deformations of the standard coproduct are inequivalent
    CHECK(run_cli("intertwine --family standard --q 2 --q-target 3 --n-source 0 --n-target 0")
              .exit_code == 3);
}

TEST_CASE("json lines parse into reports and agree with text output") {
    const std::string args =
        "verify --suite homomorphism --family modified-primed --n 0,1,2 --q 0.5,2 --j1 1/2 --j2 1";
    const auto text = run_cli(args);
    const auto jsonl = run_cli(args + " --json");
    CHECK(text.exit_code == 0);
    CHECK(jsonl.exit_code == 0);

    const auto docs = parse_lines(jsonl.output);
    CHECK(docs.size() == 6);

    // every line deserializes into the report schema
    for (const auto& doc : docs) {
        const auto report = qsu2::report_from_json(doc);
        CHECK(qsu2::to_json(report) == doc);
        CHECK(report.check == "homomorphism");
        CHECK(report.pass);
    }

    // text residuals match the JSON stream to 12 significant digits
    std::vector<std::string> text_lines;
    std::size_t start = 0;
    while (start < text.output.size()) {
        auto end = text.output.find('\n', start);
        if (end == std::string::npos) end = text.output.size();
        if (end > start) text_lines.push_back(text.output.substr(start, end - start));
        start = end + 1;
    }
    REQUIRE(text_lines.size() == docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        char expected[64];
        std::snprintf(expected, sizeof expected, "%.12g", docs[i]["residual"].get<double>());
        CHECK(text_lines[i].find(std::string("residual=") + expected) != std::string::npos);
    }
}

TEST_CASE("json array mode emits a single document") {
    const auto r = run_cli(
        "verify --suite cocomm --family modified --n 1,2 --q 1 --j1 1/2 --j2 1/2 --json=array");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 2);
    CHECK(doc[0]["residual"].get<double>() == 2.0);
    CHECK(doc[1]["residual"].get<double>() == 0.0);
}

TEST_CASE("failed expectations map to exit code 1") {
    // a tolerance of zero cannot be met by the deformed multiplet residuals
    const auto r =
        run_cli("verify --suite multiplet --family modified --n 1 --q 2 --j1 1 --j2 1 --tol 0");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("[FAIL]") != std::string::npos);
}

TEST_CASE("irrep command prints the golden spin-1/2 matrices") {
    const auto r = run_cli("irrep --j 1/2 --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["Jp"][0][1]["re"].get<double>() == 1.0);
    CHECK(doc["Jp"][1][0]["re"].get<double>() == 0.0);
    CHECK(doc["J0"][0][0]["re"].get<double>() == 0.5);
    CHECK(doc["deformed"].get<bool>() == false);

    const auto deformed = run_cli("irrep --j 1 --q 2 --deformed --json");
    const auto ddoc = nlohmann::json::parse(deformed.output);
    CHECK(ddoc["Jp"][0][1]["re"].get<double>() == doctest::Approx(std::sqrt(2.5)));
}

TEST_CASE("cg command reports the symmetry flip") {
    const auto r = run_cli("cg --family modified-primed --n 1 --q 1 --j1 1/2 --j2 1/2 --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    for (const auto& state : doc["states"]) {
        if (state["j_total"] == "0")
            CHECK(state["symmetry"] == "symmetric");
        else if (state["j_total"] == "1" && state["m"] == "0")
            CHECK(state["symmetry"] == "antisymmetric");
    }
}

TEST_CASE("limit command fits against the predicted coefficients") {
    const auto r = run_cli("limit --j 3/2 --deltas 1e-2,5e-3,2e-3,1e-3 --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["fitted"]["c_neg2"].get<double>() == doctest::Approx(4.0).epsilon(1e-3));
    CHECK(doc["fitted"]["c0"].get<double>() == doctest::Approx(4.25).epsilon(1e-3));
    CHECK(doc["fitted"]["c2"].get<double>() == doctest::Approx(63.0 / 64.0).epsilon(1e-3));
    CHECK(doc["predicted"]["c2"].get<double>() == doctest::Approx(63.0 / 64.0));
}

TEST_CASE("out file receives the stream") {
    const std::string path = "/tmp/qsu2_cli_test_out.jsonl";
    std::remove(path.c_str());
    const auto r = run_cli("verify --suite counit --family modified --n 1 --q 2 --j1 1 --out " +
                           path + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buffer{};
    std::string content;
    while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), f)) content += buffer.data();
    std::fclose(f);
    const auto doc = nlohmann::json::parse(content);
    CHECK(doc["check"] == "counit");
    std::remove(path.c_str());
}
