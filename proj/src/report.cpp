#include "qsu2/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qsu2 {

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& j : report.reps) reps.push_back(j.to_string());
    return nlohmann::json{
        {"check", report.check},
        {"family",
         {{"kind", to_string(report.family.kind)},
          {"q", {{"modulus", report.family.q.modulus}, {"phase", report.family.q.phase}}},
          {"n", report.family.n}}},
        {"reps", reps},
        {"residual", report.residual},
        {"tolerance", report.tolerance},
        {"pass", report.pass},
        {"detail", report.detail},
    };
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "standard") return FamilyKind::StandardDJ;
    if (name == "modified") return FamilyKind::Modified;
    if (name == "modified-primed") return FamilyKind::ModifiedPrimed;
    throw std::invalid_argument("unknown coproduct family \"" + name + "\"");
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport report;
    report.check = j.at("check").get<std::string>();
    const auto& fam = j.at("family");
    report.family.kind = family_kind_from_string(fam.at("kind").get<std::string>());
    report.family.q =
        QPoint(fam.at("q").at("modulus").get<double>(), fam.at("q").at("phase").get<double>());
    report.family.n = fam.at("n").get<int>();
    for (const auto& rep : j.at("reps")) report.reps.push_back(HalfInt::parse(rep.get<std::string>()));
    report.residual = j.at("residual").get<double>();
    report.tolerance = j.at("tolerance").get<double>();
    report.pass = j.at("pass").get<bool>();
    report.detail = j.at("detail");
    return report;
}

std::string format_report_line(const VerificationReport& report) {
    std::ostringstream os;
    os << (report.pass ? "[PASS] " : "[FAIL] ") << report.check;
    os << "  family=" << to_string(report.family.kind) << " q=(" << report.family.q.modulus << ","
       << report.family.q.phase << ")";
    if (report.family.kind != FamilyKind::StandardDJ) os << " n=" << report.family.n;
    if (!report.reps.empty()) {
        os << " reps=";
        for (std::size_t i = 0; i < report.reps.size(); ++i) {
            if (i > 0) os << "(x)";
            os << report.reps[i].to_string();
        }
    }
    os.precision(12);
    os << "  residual=" << report.residual << "  tol=" << report.tolerance;
    if (!report.detail.is_null() && report.detail.contains("note"))
        os << "  (" << report.detail["note"].get<std::string>() << ")";
    return os.str();
}

}  // namespace qsu2
