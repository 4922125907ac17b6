#include "qsu2/report.hpp"

#include "doctest.h"

using namespace qsu2;

TEST_CASE("report serialization round-trips losslessly") {
    VerificationReport report;
    report.check = "homomorphism";
    report.family = {FamilyKind::Modified, QPoint(1.0 + 1e-6, kPi), 3};
    report.reps = {HalfInt(1), HalfInt::whole(2)};
    report.residual = 3.141592653589793e-11;
    report.tolerance = 1e-10;
    report.pass = true;
    report.detail = {{"note", "grid point 7"}, {"separation", 0.5}};

    const auto j = to_json(report);
    const auto text = j.dump();
    const auto back = report_from_json(nlohmann::json::parse(text));
    CHECK(back == report);

    SUBCASE("spins serialize as p/2 strings") {
        CHECK(j["reps"][0] == "1/2");
        CHECK(j["reps"][1] == "2");
    }
    SUBCASE("q keeps its branch data") {
        CHECK(j["family"]["q"]["modulus"].get<double>() == 1.0 + 1e-6);
        CHECK(j["family"]["q"]["phase"].get<double>() == kPi);
    }
    SUBCASE("null detail survives") {
        report.detail = nullptr;
        const auto round = report_from_json(nlohmann::json::parse(to_json(report).dump()));
        CHECK(round == report);
    }
}

TEST_CASE("family kinds map to CLI names") {
    for (const auto kind :
         {FamilyKind::StandardDJ, FamilyKind::Modified, FamilyKind::ModifiedPrimed})
        CHECK(family_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(family_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("report line carries 12 significant digits") {
    VerificationReport report;
    report.check = "counit";
    report.family = {FamilyKind::StandardDJ, QPoint(2, 0), 0};
    report.reps = {HalfInt(1)};
    report.residual = 1.23456789012345e-13;
    report.tolerance = 1e-10;
    report.pass = true;
    const auto line = format_report_line(report);
    CHECK(line.find("1.23456789012e-13") != std::string::npos);
    CHECK(line.find("[PASS]") == 0);
}
