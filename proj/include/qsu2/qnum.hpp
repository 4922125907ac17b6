#pragma once

#include <complex>
#include <vector>

#include "qsu2/halfint.hpp"

namespace qsu2 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Deformation parameter with explicit branch data: q = modulus * e^{i*phase},
/// modulus > 0, phase in (-pi, pi]. Powers q^x are defined single-valued as
/// modulus^x * e^{i*x*phase}, which keeps half-integer powers continuous along
/// the approach path q = (1+delta, pi) to q = -1.
struct QPoint {
    double modulus = 1.0;
    double phase = 0.0;

    QPoint() = default;
    QPoint(double modulus_value, double phase_value);

    static QPoint one() { return QPoint(1.0, 0.0); }
    static QPoint minus_one() { return QPoint(1.0, kPi); }

    /// q as a complex number; exact on the real axis (phase 0 or pi).
    Complex value() const;

    /// (1/modulus, -phase), the point representing q^{-1} on the same branch.
    QPoint inverse() const { return QPoint(1.0 / modulus, -phase); }

    bool is_one() const { return modulus == 1.0 && phase == 0.0; }
    bool is_minus_one() const { return modulus == 1.0 && phase == kPi; }

    friend bool operator==(const QPoint&, const QPoint&) = default;
};

/// e^{i*pi*t/2} for integer t, exact on the lattice {1, i, -1, -i}.
Complex quarter_turn(int t);

/// q^x on the branch fixed by the stored phase. Exact phase handling on the
/// half-integer lattice when q lies on the negative real axis.
Complex q_power(const QPoint& q, HalfInt x);
Complex q_power(const QPoint& q, double x);

/// [x] = (q^x - q^{-x}) / (q - q^{-1}). Analytic limits: x at q = 1 and
/// (-1)^{x+1} * x at q = -1 for integer x. Throws DivergentError at q = -1
/// for half-odd x.
Complex q_number(const QPoint& q, HalfInt x);
Complex q_number(const QPoint& q, double x);

/// [j][j+1], the scalar value of the quadratic Casimir on the spin-j irrep.
Complex casimir_scalar(const QPoint& q, HalfInt j);

/// Result of fitting [j][j+1] along q = (1+delta, pi) against the even basis
/// {eps^{-2}, 1, eps^2}, eps = q - q^{-1}.
struct SeriesFit {
    double c_neg2 = 0.0;
    double c0 = 0.0;
    double c2 = 0.0;
    double residual = 0.0;
};

/// Evaluate [j][j+1] at q = (1+delta, pi) for each delta (eps is then real,
/// about -2*delta) and least-squares fit the even series. Deltas must be
/// sorted descending, positive, below 0.1, with at least 4 samples.
/// Throws IllConditionedError when the fit matrix is numerically singular.
SeriesFit casimir_series_fit(HalfInt j, const std::vector<double>& deltas);

/// Closed-form divergence coefficients of [j][j+1] near q = -1 for
/// half-odd-integer j: 4/eps^2 + (1/2 + j(j+1))
/// + (-1/32 + j(j+1)(2j^2+2j-1)/24) eps^2 + ...
struct DivergenceCoefficients {
    double c_neg2 = 0.0;
    double c0 = 0.0;
    double c2 = 0.0;
};
DivergenceCoefficients casimir_divergence_coefficients(HalfInt j);

}  // namespace qsu2
