#include "qsu2/qnum.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "qsu2/errors.hpp"

namespace qsu2 {

QPoint::QPoint(double modulus_value, double phase_value) : modulus(modulus_value) {
    if (!(modulus > 0.0) || !std::isfinite(modulus))
        throw std::invalid_argument("QPoint modulus must be positive and finite");
    if (!std::isfinite(phase_value))
        throw std::invalid_argument("QPoint phase must be finite");
    double wrapped = std::remainder(phase_value, 2.0 * kPi);
    if (wrapped == -kPi) wrapped = kPi;
    phase = wrapped;
}

Complex QPoint::value() const {
    if (phase == 0.0) return {modulus, 0.0};
    if (phase == kPi) return {-modulus, 0.0};
    return std::polar(modulus, phase);
}

Complex quarter_turn(int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Complex q_power(const QPoint& q, HalfInt x) {
    const double mag = std::pow(q.modulus, x.value());
    if (q.phase == 0.0) return {mag, 0.0};
    if (q.phase == kPi) return mag * quarter_turn(x.twice);
    return std::polar(mag, x.value() * q.phase);
}

Complex q_power(const QPoint& q, double x) {
    return std::polar(std::pow(q.modulus, x), x * q.phase);
}

Complex q_number(const QPoint& q, HalfInt x) {
    if (q.is_one()) return {x.value(), 0.0};
    if (q.is_minus_one()) {
        if (!x.is_integer())
            throw DivergentError("q-number [" + x.to_string() + "] diverges at q = -1");
        const int k = x.as_int();
        // (-1)^{x+1} * x
        return {(k % 2 == 0) ? -static_cast<double>(k) : static_cast<double>(k), 0.0};
    }
    const Complex qv = q.value();
    return (q_power(q, x) - q_power(q, -x)) / (qv - 1.0 / qv);
}

Complex q_number(const QPoint& q, double x) {
    if (q.is_one()) return {x, 0.0};
    if (q.is_minus_one()) {
        if (x != std::nearbyint(x))
            throw DivergentError("q-number diverges at q = -1 for non-integer argument");
        const long k = static_cast<long>(std::nearbyint(x));
        return {(k % 2 == 0) ? -x : x, 0.0};
    }
    const Complex qv = q.value();
    return (q_power(q, x) - q_power(q, -x)) / (qv - 1.0 / qv);
}

Complex casimir_scalar(const QPoint& q, HalfInt j) {
    return q_number(q, j) * q_number(q, j + HalfInt::whole(1));
}

SeriesFit casimir_series_fit(HalfInt j, const std::vector<double>& deltas) {
    if (j.twice < 0) throw std::invalid_argument("casimir_series_fit: j must be >= 0");
    if (deltas.size() < 4)
        throw std::invalid_argument("casimir_series_fit: need at least 4 sample deltas");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0) || !(deltas[i] < 0.1))
            throw std::invalid_argument("casimir_series_fit: deltas must lie in (0, 0.1)");
        if (i > 0 && deltas[i] > deltas[i - 1])
            throw std::invalid_argument("casimir_series_fit: deltas must be sorted descending");
    }

    const auto n = static_cast<Eigen::Index>(deltas.size());
    Eigen::MatrixXd basis(n, 3);
    Eigen::VectorXd values(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const QPoint q(1.0 + deltas[static_cast<std::size_t>(i)], kPi);
        const Complex qv = q.value();
        const double eps = (qv - 1.0 / qv).real();  // exactly real on this path
        basis(i, 0) = 1.0 / (eps * eps);
        basis(i, 1) = 1.0;
        basis(i, 2) = eps * eps;
        values(i) = casimir_scalar(q, j).real();
    }

    // Column equilibration keeps the singularity gate meaningful despite the
    // huge scale spread between eps^{-2} and eps^2.
    Eigen::Vector3d scale;
    for (int c = 0; c < 3; ++c) scale(c) = basis.col(c).norm();
    Eigen::MatrixXd scaled = basis;
    for (int c = 0; c < 3; ++c) scaled.col(c) /= scale(c);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(2) < 1e-10 * sv(0))
        throw IllConditionedError("casimir_series_fit: fit matrix numerically singular");

    Eigen::Vector3d coeffs = svd.solve(values);
    for (int c = 0; c < 3; ++c) coeffs(c) /= scale(c);

    SeriesFit fit;
    fit.c_neg2 = coeffs(0);
    fit.c0 = coeffs(1);
    fit.c2 = coeffs(2);
    fit.residual = (basis * coeffs - values).norm();
    return fit;
}

DivergenceCoefficients casimir_divergence_coefficients(HalfInt j) {
    const double jj = j.value() * (j.value() + 1.0);
    DivergenceCoefficients c;
    c.c_neg2 = 4.0;
    c.c0 = 0.5 + jj;
    c.c2 = -1.0 / 32.0 + jj * (2.0 * j.value() * j.value() + 2.0 * j.value() - 1.0) / 24.0;
    return c;
}

}  // namespace qsu2
