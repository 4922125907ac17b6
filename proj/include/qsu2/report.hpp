#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qsu2/halfint.hpp"
#include "qsu2/hopf.hpp"

namespace qsu2 {

/// Structured pass/fail record emitted by the verification suites. Spins
/// serialize as "p/2" strings, q as {"modulus", "phase"}, so branch data
/// survives round-trips.
struct VerificationReport {
    std::string check;
    CoproductFamily family;
    std::vector<HalfInt> reps;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    nlohmann::json detail;  // optional free-form payload; null when absent

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

FamilyKind family_kind_from_string(const std::string& name);

/// One line per report, residuals to 12 significant digits (the same digits
/// the JSON stream carries).
std::string format_report_line(const VerificationReport& report);

}  // namespace qsu2
