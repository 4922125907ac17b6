// Command-line front-end: verification suites over (family, q, n, spins)
// grids, CG tables, irrep matrices, divergence fits, and intertwiner search.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsu2/clebsch.hpp"
#include "qsu2/errors.hpp"
#include "qsu2/exchange.hpp"
#include "qsu2/hopf.hpp"
#include "qsu2/irrep.hpp"
#include "qsu2/qnum.hpp"
#include "qsu2/report.hpp"

using namespace qsu2;
using nlohmann::json;

namespace {

constexpr int kExitAllPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitNoIntertwiner = 3;
constexpr int kExitUsage = 64;

constexpr double kCocommZero = 1e-14;
constexpr double kCocommSeparation = 0.5;
constexpr double kNaiveLimitTol = 1e-4;

struct OutputOptions {
    std::string json_mode;  // "", "lines", or "array"
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_flag("--json{lines}", opts.json_mode, "emit JSON (one object per line, or --json=array)")
        ->expected(0, 1)
        ->check(CLI::IsMember({"lines", "array"}));
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
}

/// Accepts plain reals plus "pi" shorthands: "pi", "-pi", "pi/2", "2pi/3".
double parse_theta(const std::string& text) {
    const auto bad = [&] {
        return CLI::ValidationError("--theta", "cannot parse angle \"" + text + "\"");
    };
    std::string s = text;
    double sign = 1.0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sign = -1.0;
        s.erase(0, 1);
    }
    const auto pos = s.find("pi");
    if (pos == std::string::npos) {
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw bad();
            return v;
        } catch (const std::exception&) {
            throw bad();
        }
    }
    double coef = 1.0;
    if (pos > 0) {
        try {
            std::size_t used = 0;
            coef = std::stod(s.substr(0, pos), &used);
            if (used != pos) throw bad();
        } catch (const std::exception&) {
            throw bad();
        }
    }
    double den = 1.0;
    if (pos + 2 < s.size()) {
        if (s[pos + 2] != '/') throw bad();
        try {
            std::size_t used = 0;
            den = std::stod(s.substr(pos + 3), &used);
            if (used != s.size() - pos - 3 || den == 0.0) throw bad();
        } catch (const std::exception&) {
            throw bad();
        }
    }
    return sign * coef * kPi / den;
}

HalfInt parse_spin(const std::string& text) {
    try {
        const HalfInt j = HalfInt::parse(text);
        if (j.twice < 0) throw std::invalid_argument("negative spin");
        return j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("spin", e.what());
    }
}

std::string fmt_complex(Complex z) {
    const auto chop = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
    const double re = chop(z.real());
    const double im = chop(z.imag());
    std::ostringstream os;
    os.precision(6);
    if (im == 0.0) {
        os << re;
    } else if (re == 0.0) {
        os << im << "i";
    } else {
        os << re << (im > 0 ? "+" : "-") << std::abs(im) << "i";
    }
    return os.str();
}

void print_matrix(std::ostream& os, const std::string& name, const Matrix& m) {
    os << name << " =\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        os << "  [";
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            os << (c ? ", " : " ") << std::setw(10) << fmt_complex(m(r, c));
        os << " ]\n";
    }
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
        rows.push_back(row);
    }
    return rows;
}

class OutputStream {
public:
    explicit OutputStream(const OutputOptions& opts) : opts_(opts) {
        if (!opts.out_path.empty()) {
            file_.open(opts.out_path);
            if (!file_) throw Error("cannot open output file " + opts.out_path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }
    const OutputOptions& options() const { return opts_; }

private:
    OutputOptions opts_;
    std::ofstream file_;
};

int emit_reports(const std::vector<VerificationReport>& reports, const OutputOptions& opts) {
    OutputStream out(opts);
    if (opts.json_mode == "array") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out.get() << arr.dump(2) << "\n";
    } else if (opts.json_mode == "lines") {
        for (const auto& r : reports) out.get() << to_json(r).dump() << "\n";
    } else {
        for (const auto& r : reports) out.get() << format_report_line(r) << "\n";
    }
    for (const auto& r : reports)
        if (!r.pass) return kExitSuiteFailure;
    return kExitAllPass;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

struct GridSpec {
    FamilyKind kind = FamilyKind::Modified;
    std::vector<QPoint> qs;
    std::vector<int> ns;
    HalfInt j1, j2, j3;
    double tol = 1e-10;
    bool near_minus_one = false;
};

VerificationReport make_report(const std::string& check, const CoproductFamily& fam,
                               std::vector<HalfInt> reps, double residual, double tol) {
    VerificationReport r;
    r.check = check;
    r.family = fam;
    r.reps = std::move(reps);
    r.residual = residual;
    r.tolerance = tol;
    r.pass = residual <= tol;
    return r;
}

void run_homomorphism(const GridSpec& g, const CoproductFamily& fam,
                      std::vector<VerificationReport>& out) {
    const auto t = realize(fam, g.j1, g.j2);
    if (g.near_minus_one && fam.kind == FamilyKind::StandardDJ) {
        // naive limit: the commutator lands at -2*dJ0 and misses the
        // classical requisite +2*dJ0 by 4
        const Matrix c = t.dJp * t.dJm - t.dJm * t.dJp;
        auto limit = make_report("homomorphism.naive-limit", fam, {g.j1, g.j2},
                                 max_abs(Matrix(c + 2.0 * t.dJ0)), kNaiveLimitTol);
        limit.detail = {{"note", "commutator equals -2*dJ0 in the naive q->-1 limit"}};
        out.push_back(limit);

        const double requisite = verify_homomorphism(t, QPoint::one());
        VerificationReport req;
        req.check = "homomorphism.naive-limit-requisite";
        req.family = fam;
        req.reps = {g.j1, g.j2};
        req.residual = requisite;
        req.tolerance = kNaiveLimitTol;
        req.pass = std::abs(requisite - 4.0) <= kNaiveLimitTol;
        req.detail = {{"note", "residual against the classical relation; expected 4"},
                      {"expected", 4.0}};
        out.push_back(req);
    }
    out.push_back(make_report("homomorphism", fam, {g.j1, g.j2}, verify_homomorphism(t), g.tol));
}

void run_cocommutativity(const GridSpec& g, const CoproductFamily& fam,
                         std::vector<VerificationReport>& out) {
    const double r = cocommutativity_residual(fam, g.j1, g.j2);
    VerificationReport report;
    report.check = "cocommutativity";
    report.family = fam;
    report.reps = {g.j1, g.j2};
    report.residual = r;
    report.tolerance = kCocommZero;
    if (fam.q == QPoint::one()) {
        const bool trivial_factor = g.j1.twice == 0 || g.j2.twice == 0;
        const bool expect_zero = fam.kind == FamilyKind::StandardDJ || fam.n % 2 == 0 ||
                                 (g.j1.is_integer() && g.j2.is_integer()) || trivial_factor;
        if (expect_zero) {
            report.pass = r <= kCocommZero;
            report.detail = {{"note", "expected cocommutative"}, {"expected", "cocommutative"}};
        } else {
            report.pass = r >= kCocommSeparation;
            report.detail = {{"note", "expected non-cocommutative (separation 0.5)"},
                             {"expected", "non-cocommutative"},
                             {"separation", kCocommSeparation}};
        }
    } else {
        report.pass = true;
        report.detail = {{"note", "no dichotomy contract away from q=1; reporting residual"},
                         {"expected", "unconstrained"}};
    }
    out.push_back(report);
}

void run_multiplet(const GridSpec& g, const CoproductFamily& fam,
                   std::vector<VerificationReport>& out) {
    const auto states = cg_decompose(fam, g.j1, g.j2);
    const auto t = realize(fam, g.j1, g.j2);
    const double r = verify_multiplet(states, t);
    int total = 0;
    json towers = json::array();
    for (const auto& s : states)
        if (s.m == s.j_total) {
            total += s.j_total.twice + 1;
            towers.push_back(s.j_total.to_string());
        }
    const bool complete = total == (g.j1.twice + 1) * (g.j2.twice + 1);
    auto report = make_report("multiplet", fam, {g.j1, g.j2}, r, g.tol);
    report.pass = report.pass && complete;
    report.detail = {{"towers", towers}, {"complete", complete}};
    out.push_back(report);
}

void run_intertwiner(const GridSpec& g, const CoproductFamily& fam,
                     std::vector<VerificationReport>& out) {
    const int n_source = g.ns.size() >= 1 ? g.ns[0] : 1;
    const int n_target = g.ns.size() >= 2 ? g.ns[1] : 0;
    CoproductFamily source = fam;
    source.n = n_source;
    CoproductFamily target = fam;
    target.n = n_target;
    const auto found = find_intertwiner(source, target, g.j1, g.j2);
    auto report = make_report("intertwiner", source, {g.j1, g.j2}, found.residual, g.tol);
    report.detail = {{"nullspace_dim", found.nullspace_dim}, {"n_target", n_target}};
    if (g.j1.twice == 1 && g.j2.twice == 1 && fam.q == QPoint::one() &&
        fam.kind == FamilyKind::ModifiedPrimed && n_source % 2 == 1 && n_target % 2 == 0) {
        report.detail["golden_u_residual"] =
            verify_intertwiner(golden_U(), source, target, g.j1, g.j2);
    }
    out.push_back(report);
}

std::vector<VerificationReport> run_verify(const std::string& suite, const GridSpec& g) {
    std::vector<VerificationReport> out;
    std::vector<int> ns = g.ns;
    if (g.kind == FamilyKind::StandardDJ && !ns.empty()) ns.resize(1);  // n is ignored
    for (const auto& q : g.qs)
        for (const int n : ns) {
            const CoproductFamily fam{g.kind, q, n};
            const bool all = suite == "all";
            if (suite == "homomorphism" || all) run_homomorphism(g, fam, out);
            if (suite == "coassoc" || all)
                out.push_back(make_report("coassociativity", fam, {g.j1, g.j2, g.j3},
                                          verify_coassociativity(fam, g.j1, g.j2, g.j3), g.tol));
            if (suite == "counit" || all)
                out.push_back(make_report("counit", fam, {g.j1},
                                          verify_counit(fam, g.j1), g.tol));
            if (suite == "antipode" || all)
                out.push_back(make_report("antipode", fam, {g.j1},
                                          verify_antipode(fam, g.j1), g.tol));
            if (suite == "star" || all)
                out.push_back(make_report("star", fam, {g.j1, g.j2},
                                          verify_star(realize(fam, g.j1, g.j2)), g.tol));
            if (suite == "cocomm" || all) run_cocommutativity(g, fam, out);
            if (suite == "multiplet" || all) run_multiplet(g, fam, out);
            if (suite == "intertwiner") run_intertwiner(g, fam, out);
            if (all && (g.j1.twice + 1) * (g.j2.twice + 1) <= 9 && n == g.ns.front())
                run_intertwiner(g, fam, out);
        }
    return out;
}

// ---------------------------------------------------------------------------
// subcommand drivers
// ---------------------------------------------------------------------------

int cmd_irrep(HalfInt j, const QPoint& q, bool deformed, const OutputOptions& opts) {
    const Irrep rep = deformed ? build_q_irrep(j, q) : build_classical_irrep(j);
    const Matrix casimir = casimir_matrix(rep);
    OutputStream out(opts);
    if (!opts.json_mode.empty()) {
        json doc{{"j", j.to_string()},
                 {"q", {{"modulus", rep.q.modulus}, {"phase", rep.q.phase}}},
                 {"deformed", rep.deformed},
                 {"Jp", matrix_to_json(rep.Jp)},
                 {"Jm", matrix_to_json(rep.Jm)},
                 {"J0", matrix_to_json(rep.J0)},
                 {"casimir", matrix_to_json(casimir)}};
        out.get() << (opts.json_mode == "array" ? json::array({doc}).dump(2) : doc.dump())
                  << "\n";
        return kExitAllPass;
    }
    out.get() << "spin j = " << j.to_string() << (rep.deformed ? "  (q-deformed, q=(" : "  (classical, q=(")
              << rep.q.modulus << "," << rep.q.phase << "))\n";
    print_matrix(out.get(), "J+", rep.Jp);
    print_matrix(out.get(), "J-", rep.Jm);
    print_matrix(out.get(), "J0", rep.J0);
    print_matrix(out.get(), "Casimir", casimir);
    return kExitAllPass;
}

int cmd_cg(const CoproductFamily& fam, HalfInt j1, HalfInt j2, double tol,
           const OutputOptions& opts) {
    const auto states = cg_decompose(fam, j1, j2);
    const auto t = realize(fam, j1, j2);
    const bool identical = j1 == j2;

    OutputStream out(opts);
    if (!opts.json_mode.empty()) {
        json basis = json::array();
        for (int i = 0; i < t.dim(); ++i) {
            const auto [m1, m2] = t.basis_weights(i);
            basis.push_back({m1.to_string(), m2.to_string()});
        }
        json list = json::array();
        for (const auto& s : states) {
            json coeffs = json::array();
            for (Eigen::Index i = 0; i < s.coeffs.size(); ++i)
                coeffs.push_back({{"re", s.coeffs(i).real()}, {"im", s.coeffs(i).imag()}});
            json entry{{"j_total", s.j_total.to_string()},
                       {"m", s.m.to_string()},
                       {"coeffs", coeffs}};
            entry["symmetry"] =
                identical ? json(to_string(classify_symmetry(s, tol))) : json(nullptr);
            list.push_back(entry);
        }
        json doc{{"family",
                  {{"kind", to_string(fam.kind)},
                   {"q", {{"modulus", fam.q.modulus}, {"phase", fam.q.phase}}},
                   {"n", fam.n}}},
                 {"reps", {j1.to_string(), j2.to_string()}},
                 {"basis", basis},
                 {"states", list}};
        out.get() << (opts.json_mode == "array" ? json::array({doc}).dump(2) : doc.dump())
                  << "\n";
        return kExitAllPass;
    }

    out.get() << "decomposition of " << j1.to_string() << " (x) " << j2.to_string()
              << " under family=" << to_string(fam.kind) << " q=(" << fam.q.modulus << ","
              << fam.q.phase << ") n=" << fam.n << "\n";
    for (const auto& s : states) {
        out.get() << "  |" << s.j_total.to_string() << "," << s.m.to_string() << ">";
        if (identical) out.get() << "  [" << to_string(classify_symmetry(s, tol)) << "]";
        out.get() << "  = ";
        bool first = true;
        for (Eigen::Index i = 0; i < s.coeffs.size(); ++i) {
            if (std::abs(s.coeffs(i)) < 1e-12) continue;
            const auto [m1, m2] = t.basis_weights(static_cast<int>(i));
            out.get() << (first ? "" : "  +  ") << "(" << fmt_complex(s.coeffs(i)) << ")|"
                      << m1.to_string() << "," << m2.to_string() << ">";
            first = false;
        }
        out.get() << "\n";
    }
    return kExitAllPass;
}

int cmd_limit(HalfInt j, const std::vector<double>& deltas, const OutputOptions& opts) {
    const SeriesFit fit = casimir_series_fit(j, deltas);
    const bool half_odd = !j.is_integer();
    json predicted = nullptr;
    if (half_odd) {
        const auto p = casimir_divergence_coefficients(j);
        predicted = {{"c_neg2", p.c_neg2}, {"c0", p.c0}, {"c2", p.c2}};
    } else {
        // integer spins have a finite limit: no divergent term, value -j(j+1)
        predicted = {{"c_neg2", 0.0}, {"c0", -j.value() * (j.value() + 1.0)}};
    }

    OutputStream out(opts);
    if (!opts.json_mode.empty()) {
        json doc{{"j", j.to_string()},
                 {"deltas", deltas},
                 {"fitted",
                  {{"c_neg2", fit.c_neg2}, {"c0", fit.c0}, {"c2", fit.c2},
                   {"residual", fit.residual}}},
                 {"predicted", predicted}};
        out.get() << (opts.json_mode == "array" ? json::array({doc}).dump(2) : doc.dump())
                  << "\n";
        return kExitAllPass;
    }
    out.get().precision(12);
    out.get() << "series fit of [j][j+1] along q = (1+delta, pi), j = " << j.to_string() << "\n";
    out.get() << "  fitted:    c_neg2=" << fit.c_neg2 << "  c0=" << fit.c0 << "  c2=" << fit.c2
              << "  residual=" << fit.residual << "\n";
    if (half_odd) {
        const auto p = casimir_divergence_coefficients(j);
        out.get() << "  predicted: c_neg2=" << p.c_neg2 << "  c0=" << p.c0 << "  c2=" << p.c2
                  << "\n";
    } else {
        out.get() << "  predicted: finite limit, c_neg2=0, value " << -j.value() * (j.value() + 1.0)
                  << "\n";
    }
    return kExitAllPass;
}

int cmd_intertwine(FamilyKind kind, const QPoint& q, const QPoint& q_target, int n_source,
                   int n_target, HalfInt j1, HalfInt j2, double tol, const OutputOptions& opts) {
    const CoproductFamily source{kind, q, n_source};
    const CoproductFamily target{kind, q_target, n_target};
    const auto found = find_intertwiner(source, target, j1, j2);

    const bool golden_case = j1.twice == 1 && j2.twice == 1 && q == QPoint::one() &&
                            q_target == QPoint::one() && kind == FamilyKind::ModifiedPrimed &&
                            n_source % 2 == 1 && n_target % 2 == 0;
    double golden_residual = -1.0;
    double commutant_residual = -1.0;
    if (golden_case) {
        golden_residual = verify_intertwiner(golden_U(), source, target, j1, j2);
        // W agrees with the golden matrix up to the target commutant
        const Matrix c = found.w * golden_U().adjoint();
        commutant_residual = verify_intertwiner(c, target, target, j1, j2);
    }

    OutputStream out(opts);
    if (!opts.json_mode.empty()) {
        json doc{{"family", to_string(kind)},
                 {"q", {{"modulus", q.modulus}, {"phase", q.phase}}},
                 {"q_target", {{"modulus", q_target.modulus}, {"phase", q_target.phase}}},
                 {"n_source", n_source},
                 {"n_target", n_target},
                 {"reps", {j1.to_string(), j2.to_string()}},
                 {"W", matrix_to_json(found.w)},
                 {"residual", found.residual},
                 {"nullspace_dim", found.nullspace_dim},
                 {"pass", found.residual <= tol}};
        if (golden_case) {
            doc["golden_u_residual"] = golden_residual;
            doc["commutant_residual"] = commutant_residual;
        }
        out.get() << (opts.json_mode == "array" ? json::array({doc}).dump(2) : doc.dump())
                  << "\n";
        return found.residual <= tol ? kExitAllPass : kExitSuiteFailure;
    }

    out.get().precision(12);
    out.get() << "intertwiner between " << to_string(kind) << " coproducts n=" << n_source
              << " (q=(" << q.modulus << "," << q.phase << ")) -> n=" << n_target << " (q=("
              << q_target.modulus << "," << q_target.phase << ")) on " << j1.to_string()
              << " (x) " << j2.to_string() << "\n";
    print_matrix(out.get(), "W", found.w);
    out.get() << "residual=" << found.residual << "  nullspace_dim=" << found.nullspace_dim
              << "\n";
    if (golden_case)
        out.get() << "golden U residual=" << golden_residual
                  << "  W*U^dag commutant residual=" << commutant_residual << "\n";
    return found.residual <= tol ? kExitAllPass : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"su_q(2) coproduct families: representations, multiplets, and Hopf checks"};
    app.require_subcommand(1);

    // ---- irrep ----
    auto* irrep_cmd = app.add_subcommand("irrep", "print spin-j generator matrices and Casimir");
    std::string irrep_j = "1/2";
    double irrep_q = 1.0;
    std::string irrep_theta = "0";
    bool irrep_deformed = false;
    OutputOptions irrep_out;
    irrep_cmd->add_option("--j", irrep_j, "spin, e.g. 1/2 or 2")->capture_default_str();
    irrep_cmd->add_option("--q", irrep_q, "deformation modulus")->capture_default_str();
    irrep_cmd->add_option("--theta", irrep_theta, "deformation phase (accepts pi, pi/2, ...)")
        ->capture_default_str();
    irrep_cmd->add_flag("--deformed", irrep_deformed, "build the q-deformed matrices");
    add_output_options(irrep_cmd, irrep_out);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite over a grid");
    std::string suite = "all";
    std::string family_name = "modified";
    std::vector<int> ns{0, 1};
    std::vector<double> q_moduli{1.0};
    std::vector<std::string> thetas{"0"};
    std::string vj1 = "1/2", vj2 = "1/2", vj3 = "1/2";
    double tol = 1e-10;
    bool near_minus_one = false;
    OutputOptions verify_out;
    verify_cmd
        ->add_option("--suite", suite,
                     "homomorphism|coassoc|counit|antipode|star|cocomm|intertwiner|multiplet|all")
        ->check(CLI::IsMember({"homomorphism", "coassoc", "counit", "antipode", "star", "cocomm",
                               "intertwiner", "multiplet", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--family", family_name, "standard|modified|modified-primed")
        ->check(CLI::IsMember({"standard", "modified", "modified-primed"}))
        ->capture_default_str();
    verify_cmd->add_option("--n", ns, "phase integers")->delimiter(',')->capture_default_str();
    verify_cmd->add_option("--q", q_moduli, "deformation moduli")->delimiter(',')->capture_default_str();
    verify_cmd->add_option("--theta", thetas, "deformation phases")->delimiter(',')->capture_default_str();
    verify_cmd->add_option("--j1", vj1, "first spin")->capture_default_str();
    verify_cmd->add_option("--j2", vj2, "second spin")->capture_default_str();
    verify_cmd->add_option("--j3", vj3, "third spin (coassociativity)")->capture_default_str();
    verify_cmd->add_option("--tol", tol, "pass tolerance for residuals")->capture_default_str();
    verify_cmd->add_flag("--q-near-minus-one", near_minus_one,
                         "use q = (1+1e-6, pi); with the standard family this reproduces the "
                         "failed naive q->-1 limit");
    add_output_options(verify_cmd, verify_out);

    // ---- cg ----
    auto* cg_cmd = app.add_subcommand("cg", "decompose j1 (x) j2 into multiplets");
    std::string cg_family = "standard";
    int cg_n = 0;
    double cg_q = 1.0;
    std::string cg_theta = "0";
    std::string cg_j1 = "1/2", cg_j2 = "1/2";
    double cg_tol = 1e-10;
    OutputOptions cg_out;
    cg_cmd->add_option("--family", cg_family, "standard|modified|modified-primed")
        ->check(CLI::IsMember({"standard", "modified", "modified-primed"}))
        ->capture_default_str();
    cg_cmd->add_option("--n", cg_n, "phase integer")->capture_default_str();
    cg_cmd->add_option("--q", cg_q, "deformation modulus")->capture_default_str();
    cg_cmd->add_option("--theta", cg_theta, "deformation phase")->capture_default_str();
    cg_cmd->add_option("--j1", cg_j1, "first spin")->capture_default_str();
    cg_cmd->add_option("--j2", cg_j2, "second spin")->capture_default_str();
    cg_cmd->add_option("--tol", cg_tol, "symmetry classification tolerance")->capture_default_str();
    add_output_options(cg_cmd, cg_out);

    // ---- limit ----
    auto* limit_cmd = app.add_subcommand("limit", "fit the Casimir series along q -> -1");
    std::string limit_j = "1/2";
    std::vector<double> limit_deltas{1e-2, 5e-3, 2e-3, 1e-3};
    OutputOptions limit_out;
    limit_cmd->add_option("--j", limit_j, "spin")->capture_default_str();
    limit_cmd->add_option("--deltas", limit_deltas, "descending offsets from modulus 1")
        ->delimiter(',')
        ->capture_default_str();
    add_output_options(limit_cmd, limit_out);

    // ---- intertwine ----
    auto* inter_cmd = app.add_subcommand("intertwine", "solve for a unitary intertwiner");
    std::string inter_family = "modified-primed";
    double inter_q = 1.0;
    double inter_q_target = -1.0;  // mirrors --q unless given
    int n_source = 1, n_target = 0;
    std::string inter_j1 = "1/2", inter_j2 = "1/2";
    double inter_tol = 1e-10;
    OutputOptions inter_out;
    inter_cmd->add_option("--family", inter_family, "standard|modified|modified-primed")
        ->check(CLI::IsMember({"standard", "modified", "modified-primed"}))
        ->capture_default_str();
    inter_cmd->add_option("--q", inter_q, "source deformation modulus")->capture_default_str();
    inter_cmd->add_option("--q-target", inter_q_target,
                          "target deformation modulus (defaults to --q)");
    inter_cmd->add_option("--n-source", n_source, "source phase integer")->capture_default_str();
    inter_cmd->add_option("--n-target", n_target, "target phase integer")->capture_default_str();
    inter_cmd->add_option("--j1", inter_j1, "first spin")->capture_default_str();
    inter_cmd->add_option("--j2", inter_j2, "second spin")->capture_default_str();
    inter_cmd->add_option("--tol", inter_tol, "pass tolerance")->capture_default_str();
    add_output_options(inter_cmd, inter_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (irrep_cmd->parsed())
            return cmd_irrep(parse_spin(irrep_j), QPoint(irrep_q, parse_theta(irrep_theta)),
                             irrep_deformed, irrep_out);

        if (verify_cmd->parsed()) {
            GridSpec grid;
            grid.kind = family_kind_from_string(family_name);
            if (near_minus_one) {
                grid.qs = {QPoint(1.0 + 1e-6, kPi)};
            } else {
                for (const double m : q_moduli)
                    for (const auto& th : thetas) grid.qs.emplace_back(m, parse_theta(th));
            }
            grid.ns = ns;
            grid.j1 = parse_spin(vj1);
            grid.j2 = parse_spin(vj2);
            grid.j3 = parse_spin(vj3);
            grid.tol = tol;
            grid.near_minus_one = near_minus_one;
            return emit_reports(run_verify(suite, grid), verify_out);
        }

        if (cg_cmd->parsed())
            return cmd_cg({family_kind_from_string(cg_family), QPoint(cg_q, parse_theta(cg_theta)),
                           cg_n},
                          parse_spin(cg_j1), parse_spin(cg_j2), cg_tol, cg_out);

        if (limit_cmd->parsed()) return cmd_limit(parse_spin(limit_j), limit_deltas, limit_out);

        if (inter_cmd->parsed()) {
            const double tq = inter_q_target > 0.0 ? inter_q_target : inter_q;
            return cmd_intertwine(family_kind_from_string(inter_family), QPoint(inter_q, 0.0),
                                  QPoint(tq, 0.0), n_source, n_target, parse_spin(inter_j1),
                                  parse_spin(inter_j2), inter_tol, inter_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoIntertwinerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoIntertwiner;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitAllPass;
}
