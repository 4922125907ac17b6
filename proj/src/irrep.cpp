#include "qsu2/irrep.hpp"

#include <cmath>
#include <stdexcept>

#include "qsu2/errors.hpp"

namespace qsu2 {

namespace {

void check_spin(HalfInt j) {
    if (j.twice < 0) throw std::invalid_argument("spin j must be >= 0");
    if (j.twice + 1 > 64)
        throw DimensionTooLargeError("spin " + j.to_string() + " exceeds the 64-dimension guard");
}

}  // namespace

Irrep build_classical_irrep(HalfInt j) {
    check_spin(j);
    Irrep rep;
    rep.j = j;
    rep.q = QPoint::one();
    rep.deformed = false;

    const int dim = rep.dim();
    rep.Jp = Matrix::Zero(dim, dim);
    rep.Jm = Matrix::Zero(dim, dim);
    rep.J0 = Matrix::Zero(dim, dim);

    const auto w = rep.weights();
    for (int k = 0; k < dim; ++k) rep.J0(k, k) = w[static_cast<std::size_t>(k)].value();
    for (int k = 0; k + 1 < dim; ++k) {
        // raising w[k+1] -> w[k]: f_+(j,m) with m = w[k+1]
        const HalfInt m_lo = w[static_cast<std::size_t>(k) + 1];
        const int a = (j.twice - m_lo.twice) / 2;      // j - m
        const int b = (j.twice + m_lo.twice) / 2 + 1;  // j + m + 1
        rep.Jp(k, k + 1) = std::sqrt(static_cast<double>(a) * static_cast<double>(b));
        // lowering w[k] -> w[k+1]: f_-(j,m) with m = w[k]
        const HalfInt m_hi = w[static_cast<std::size_t>(k)];
        const int c = (j.twice + m_hi.twice) / 2;      // j + m
        const int d = (j.twice - m_hi.twice) / 2 + 1;  // j - m + 1
        rep.Jm(k + 1, k) = std::sqrt(static_cast<double>(c) * static_cast<double>(d));
    }
    return rep;
}

Irrep build_q_irrep(HalfInt j, const QPoint& q) {
    check_spin(j);
    Irrep rep;
    rep.j = j;
    rep.q = q;
    rep.deformed = true;

    const int dim = rep.dim();
    rep.Jp = Matrix::Zero(dim, dim);
    rep.Jm = Matrix::Zero(dim, dim);
    rep.J0 = Matrix::Zero(dim, dim);

    const auto w = rep.weights();
    for (int k = 0; k < dim; ++k) rep.J0(k, k) = w[static_cast<std::size_t>(k)].value();
    for (int k = 0; k + 1 < dim; ++k) {
        const HalfInt m_lo = w[static_cast<std::size_t>(k) + 1];
        const int a = (j.twice - m_lo.twice) / 2;
        const int b = (j.twice + m_lo.twice) / 2 + 1;
        rep.Jp(k, k + 1) =
            std::sqrt(q_number(q, HalfInt::whole(a)) * q_number(q, HalfInt::whole(b)));
        const HalfInt m_hi = w[static_cast<std::size_t>(k)];
        const int c = (j.twice + m_hi.twice) / 2;
        const int d = (j.twice - m_hi.twice) / 2 + 1;
        rep.Jm(k + 1, k) =
            std::sqrt(q_number(q, HalfInt::whole(c)) * q_number(q, HalfInt::whole(d)));
    }
    return rep;
}

Matrix casimir_matrix(const Irrep& rep) {
    if (!rep.deformed) return rep.Jp * rep.Jm + rep.J0 * rep.J0 - rep.J0;
    const int dim = rep.dim();
    Matrix diag = Matrix::Zero(dim, dim);
    const auto w = rep.weights();
    for (int k = 0; k < dim; ++k) {
        const HalfInt m = w[static_cast<std::size_t>(k)];
        diag(k, k) = q_number(rep.q, m) * q_number(rep.q, m - HalfInt::whole(1));
    }
    return rep.Jp * rep.Jm + diag;
}

}  // namespace qsu2
