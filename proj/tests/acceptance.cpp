// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything runs at desk scale (dense matrices, dims <= 512).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsu2/clebsch.hpp"
#include "qsu2/errors.hpp"
#include "qsu2/exchange.hpp"
#include "qsu2/hopf.hpp"
#include "qsu2/irrep.hpp"
#include "qsu2/qnum.hpp"

using namespace qsu2;

namespace {

const HalfInt kHalf(1);
const HalfInt kOne = HalfInt::whole(1);
const HalfInt kThreeHalf(3);
const HalfInt kTwo = HalfInt::whole(2);

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    double worst = 0.0;
    double tolerance = 0.0;
    std::string note;

    void record(double residual, double tol) {
        worst = std::max(worst, residual);
        tolerance = tol;
        if (residual > tol) pass = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) {
            pass = false;
            if (note.empty()) note = why;
        }
    }
};

const CGState& state_of(const std::vector<CGState>& states, HalfInt j, HalfInt m) {
    for (const auto& s : states)
        if (s.j_total == j && s.m == m) return s;
    throw std::logic_error("missing state");
}

double cdist(Complex a, Complex b) { return std::abs(a - b); }

// --- criterion 1: golden CG tables -----------------------------------------

Criterion criterion_golden_tables() {
    Criterion c{1, "CG golden tables (ratio tests at q in {1,2,4}; (-1)^n table at q=1)"};
    const double tol = 1e-10;

    for (const double qm : {1.0, 2.0, 4.0}) {
        for (const auto kind : {FamilyKind::StandardDJ, FamilyKind::ModifiedPrimed}) {
            const CoproductFamily fam{kind, QPoint(qm, 0), 0};
            const auto states = cg_decompose(fam, kHalf, kHalf);
            const auto& singlet = state_of(states, HalfInt(0), HalfInt(0));
            const auto& mid = state_of(states, kOne, HalfInt(0));
            c.record(cdist(singlet.coeffs(1) / singlet.coeffs(2), Complex(-qm, 0)), tol);
            c.record(cdist(mid.coeffs(1) / mid.coeffs(2), Complex(1.0 / qm, 0)), tol);
            c.record(cdist(state_of(states, kOne, kOne).coeffs(0), 1.0), tol);
            c.record(cdist(state_of(states, kOne, -kOne).coeffs(3), 1.0), tol);
        }
        // primed table with the (-1)^n factor, n = 0..3
        for (int n = 0; n <= 3; ++n) {
            const CoproductFamily fam{FamilyKind::ModifiedPrimed, QPoint(qm, 0), n};
            const double sign = n % 2 == 0 ? 1.0 : -1.0;
            const auto states = cg_decompose(fam, kHalf, kHalf);
            const auto& singlet = state_of(states, HalfInt(0), HalfInt(0));
            const auto& mid = state_of(states, kOne, HalfInt(0));
            c.record(cdist(singlet.coeffs(1) / singlet.coeffs(2), Complex(-sign * qm, 0)), tol);
            c.record(cdist(mid.coeffs(1) / mid.coeffs(2), Complex(sign / qm, 0)), tol);
            // |1,-1> = (-1)^n |--> must come out of the lowering operator
            c.record(cdist(state_of(states, kOne, -kOne).coeffs(3), Complex(sign, 0)), tol);
        }
    }

    // exact (non-projective) coefficients at q = 1
    const double r = 1.0 / std::sqrt(2.0);
    for (int n = 0; n <= 3; ++n) {
        const CoproductFamily fam{FamilyKind::ModifiedPrimed, QPoint::one(), n};
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        const auto states = cg_decompose(fam, kHalf, kHalf);
        const auto& singlet = state_of(states, HalfInt(0), HalfInt(0));
        c.record(cdist(singlet.coeffs(1), r), tol);
        c.record(cdist(singlet.coeffs(2), -sign * r), tol);
        const auto& mid = state_of(states, kOne, HalfInt(0));
        c.record(cdist(mid.coeffs(1), r), tol);
        c.record(cdist(mid.coeffs(2), sign * r), tol);
        c.record(cdist(state_of(states, kOne, kOne).coeffs(0), 1.0), tol);
        c.record(cdist(state_of(states, kOne, -kOne).coeffs(3), sign), tol);
    }
    return c;
}

// --- criterion 2: symmetry flip ---------------------------------------------

Criterion criterion_symmetry_flip() {
    Criterion c{2, "symmetry flip at q=1 (odd n: symmetric singlet, antisymmetric |1,0>)"};
    for (int n = 0; n <= 3; ++n) {
        const CoproductFamily fam{FamilyKind::ModifiedPrimed, QPoint::one(), n};
        const auto states = cg_decompose(fam, kHalf, kHalf);
        const auto singlet = classify_symmetry(state_of(states, HalfInt(0), HalfInt(0)));
        const auto mid = classify_symmetry(state_of(states, kOne, HalfInt(0)));
        const auto top = classify_symmetry(state_of(states, kOne, kOne));
        const auto bottom = classify_symmetry(state_of(states, kOne, -kOne));
        if (n % 2 == 1) {
            c.expect(singlet == SymmetryClass::Symmetric, "odd-n singlet not symmetric");
            c.expect(mid == SymmetryClass::Antisymmetric, "odd-n |1,0> not antisymmetric");
        } else {
            c.expect(singlet == SymmetryClass::Antisymmetric, "even-n singlet not antisymmetric");
            c.expect(mid == SymmetryClass::Symmetric, "even-n |1,0> not symmetric");
        }
        c.expect(top == SymmetryClass::Symmetric, "|1,1> not symmetric");
        c.expect(bottom == SymmetryClass::Symmetric, "|1,-1> not symmetric");
    }
    c.tolerance = 1e-10;
    return c;
}

// --- criterion 3: non-cocommutativity dichotomy ------------------------------

Criterion criterion_dichotomy() {
    Criterion c{3, "non-cocommutativity dichotomy (j <= 2, n <= 4, q=1)"};
    const std::vector<HalfInt> spins{kHalf, kOne, kThreeHalf, kTwo};
    for (const auto kind : {FamilyKind::Modified, FamilyKind::ModifiedPrimed})
        for (int n = 0; n <= 4; ++n)
            for (const auto j1 : spins)
                for (const auto j2 : spins) {
                    const double r =
                        cocommutativity_residual({kind, QPoint::one(), n}, j1, j2);
                    const bool zero = n % 2 == 0 || (j1.is_integer() && j2.is_integer());
                    if (zero)
                        c.expect(r <= 1e-14, "expected cocommutative point has residual " +
                                                 std::to_string(r));
                    else
                        c.expect(r >= 0.5, "expected separation missing, residual " +
                                               std::to_string(r));
                    c.worst = std::max(c.worst, zero ? r : 0.0);
                }
    for (const auto j1 : spins)
        for (const auto j2 : spins)
            c.expect(cocommutativity_residual({FamilyKind::StandardDJ, QPoint::one(), 0}, j1,
                                              j2) <= 1e-14,
                     "standard coproduct not cocommutative at q=1");
    c.tolerance = 1e-14;
    return c;
}

// --- criterion 4: Hopf axiom suite -------------------------------------------

Criterion criterion_hopf_axioms() {
    Criterion c{4, "Hopf axioms for modified families over q in {0.5,1,2}, n in {0..3}"};
    const double tol = 1e-10;
    const std::vector<HalfInt> spins{kHalf, kOne, kThreeHalf};
    for (const auto kind : {FamilyKind::Modified, FamilyKind::ModifiedPrimed})
        for (const double qm : {0.5, 1.0, 2.0})
            for (int n = 0; n <= 3; ++n) {
                const CoproductFamily fam{kind, QPoint(qm, 0), n};
                for (const auto j1 : spins)
                    for (const auto j2 : spins)
                        c.record(verify_homomorphism(realize(fam, j1, j2)), tol);
                c.record(verify_coassociativity(fam, kHalf, kHalf, kHalf), tol);
                c.record(verify_coassociativity(fam, kHalf, kOne, kHalf), tol);
                for (const auto j : spins) {
                    c.record(verify_counit(fam, j), tol);
                    c.record(verify_antipode(fam, j), tol);
                }
            }
    return c;
}

// --- criterion 5: the naive limit commutator --------------------------------------

Criterion criterion_naive_limit() {
    Criterion c{5, "naive q->-1 limit: [dJ+,dJ-] = -2*dJ0, missing the requisite by 4"};
    const QPoint q(1.0 + 1e-6, kPi);
    const auto t = realize({FamilyKind::StandardDJ, q, 0}, kHalf, kHalf);
    const Matrix comm = t.dJp * t.dJm - t.dJm * t.dJp;
    c.record(max_abs(Matrix(comm + 2.0 * t.dJ0)), 1e-4);
    const double requisite = verify_homomorphism(t, QPoint::one());
    c.expect(std::abs(requisite - 4.0) <= 1e-4,
             "classical-relation residual " + std::to_string(requisite) + " != 4");
    c.worst = std::max(c.worst, std::abs(requisite - 4.0));
    return c;
}

// --- criterion 6: Casimir divergence -----------------------------------------

Criterion criterion_divergence() {
    Criterion c{6, "Casimir divergence series: j=1/2 -> (4,5/4,-1/64), j=3/2 -> (4,17/4,63/64)"};
    const std::vector<double> deltas{1e-2, 5e-3, 2e-3, 1e-3};

    const auto check_fit = [&](HalfInt j, double c_neg2, double c0, double c2) {
        const auto fit = casimir_series_fit(j, deltas);
        c.record(std::abs(fit.c_neg2 / c_neg2 - 1.0), 1e-3);
        c.record(std::abs(fit.c0 / c0 - 1.0), 1e-3);
        c.record(std::abs(fit.c2 / c2 - 1.0), 1e-3);
    };
    check_fit(kHalf, 4.0, 5.0 / 4.0, -1.0 / 64.0);
    check_fit(kThreeHalf, 4.0, 17.0 / 4.0, 63.0 / 64.0);

    const auto integer_fit = casimir_series_fit(kOne, deltas);
    c.expect(std::abs(integer_fit.c_neg2) <= 1e-6,
             "integer j=1 shows a divergent term " + std::to_string(integer_fit.c_neg2));
    return c;
}

// --- criterion 7: intertwiner -------------------------------------------------

Criterion criterion_intertwiner() {
    Criterion c{7, "U intertwines n=1 -> n=0 primed coproducts; U P U^dag = P' exactly"};
    const CoproductFamily odd{FamilyKind::ModifiedPrimed, QPoint::one(), 1};
    const CoproductFamily even{FamilyKind::ModifiedPrimed, QPoint::one(), 0};
    c.record(verify_intertwiner(golden_U(), odd, even, kHalf, kHalf), 1e-12);

    const auto found = find_intertwiner(odd, even, kHalf, kHalf);
    c.expect(found.residual < 1e-10,
             "solver residual " + std::to_string(found.residual) + " >= 1e-10");
    c.worst = std::max(c.worst, found.residual);

    const double exact = max_abs(Matrix(golden_U() * golden_P() * golden_U().adjoint() -
                                        golden_Pprime()));
    c.expect(exact == 0.0, "U P U^dag differs from P'");
    return c;
}

// --- criterion 8: star structure ----------------------------------------------

Criterion criterion_star() {
    Criterion c{8, "canonical conjugation compatibility at real q in {0.5,1,2}, n <= 3"};
    const std::vector<HalfInt> spins{kHalf, kOne, kThreeHalf};
    for (const double qm : {0.5, 1.0, 2.0})
        for (int n = 0; n <= 3; ++n)
            for (const auto j1 : spins)
                for (const auto j2 : spins)
                    c.record(
                        verify_star(realize({FamilyKind::Modified, QPoint(qm, 0), n}, j1, j2)),
                        1e-10);
    return c;
}

// --- criterion 9: multiplet harness -------------------------------------------

Criterion criterion_multiplets() {
    Criterion c{9, "multiplet harness: residuals, completeness, orthonormality up to 2 (x) 2"};
    const std::vector<HalfInt> spins{HalfInt(0), kHalf, kOne, kThreeHalf, kTwo};
    for (const auto kind :
         {FamilyKind::StandardDJ, FamilyKind::Modified, FamilyKind::ModifiedPrimed})
        for (const double qm : {1.0, 2.0})
            for (int n : {0, 1})
                for (const auto j1 : spins)
                    for (const auto j2 : spins) {
                        const CoproductFamily fam{kind, QPoint(qm, 0), n};
                        const auto states = cg_decompose(fam, j1, j2);
                        c.record(verify_multiplet(states, realize(fam, j1, j2)), 1e-10);
                        int total = 0;
                        for (const auto& s : states)
                            if (s.m == s.j_total) total += s.j_total.twice + 1;
                        c.expect(total == (j1.twice + 1) * (j2.twice + 1),
                                 "incomplete decomposition of " + j1.to_string() + " (x) " +
                                     j2.to_string());
                    }
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    try {
        results.push_back(criterion_golden_tables());
        results.push_back(criterion_symmetry_flip());
        results.push_back(criterion_dichotomy());
        results.push_back(criterion_hopf_axioms());
        results.push_back(criterion_naive_limit());
        results.push_back(criterion_divergence());
        results.push_back(criterion_intertwiner());
        results.push_back(criterion_star());
        results.push_back(criterion_multiplets());
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }

    bool all = true;
    for (const auto& c : results) {
        std::ostringstream line;
        line << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title;
        line.precision(3);
        line << "  (worst residual " << std::scientific << c.worst;
        if (c.tolerance > 0.0) line << ", tol " << c.tolerance;
        line << ")";
        if (!c.note.empty()) line << "  -- " << c.note;
        std::cout << line.str() << "\n";
        all = all && c.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed\n"
                      : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}
