#include "qsu2/exchange.hpp"

#include <Eigen/SVD>
#include <array>
#include <stdexcept>

#include "qsu2/errors.hpp"

namespace qsu2 {

Matrix golden_U() {
    Matrix u = Matrix::Zero(4, 4);
    u(0, 0) = 1.0;
    u(1, 2) = -1.0;
    u(2, 1) = 1.0;
    u(3, 3) = -1.0;
    return u;
}

Matrix golden_P() {
    Matrix p = Matrix::Zero(4, 4);
    p(0, 0) = 1.0;
    p(1, 2) = 1.0;
    p(2, 1) = 1.0;
    p(3, 3) = 1.0;
    return p;
}

Matrix golden_Pprime() {
    Matrix p = Matrix::Zero(4, 4);
    p(0, 0) = 1.0;
    p(1, 2) = -1.0;
    p(2, 1) = -1.0;
    p(3, 3) = 1.0;
    return p;
}

Matrix eta_P(int eta) {
    if (eta != 1 && eta != -1) throw std::invalid_argument("eta must be +1 or -1");
    Matrix p = Matrix::Zero(4, 4);
    p(0, 0) = 1.0;
    p(1, 2) = eta;
    p(2, 1) = eta;
    p(3, 3) = 1.0;
    return p;
}

double verify_intertwiner(const Matrix& w, const CoproductFamily& source,
                          const CoproductFamily& target, HalfInt j1, HalfInt j2) {
    const auto s = realize(source, j1, j2);
    const auto t = realize(target, j1, j2);
    if (w.rows() != s.dim() || w.cols() != s.dim())
        throw DimensionMismatchError("intertwiner must be " + std::to_string(s.dim()) + "x" +
                                     std::to_string(s.dim()));
    double res = max_abs(Matrix(w * s.dJp * w.adjoint() - t.dJp));
    res = std::max(res, max_abs(Matrix(w * s.dJm * w.adjoint() - t.dJm)));
    res = std::max(res, max_abs(Matrix(w * s.dJ0 * w.adjoint() - t.dJ0)));
    return res;
}

namespace {

Matrix nearest_unitary(const Matrix& w) {
    Eigen::JacobiSVD<Matrix> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

Intertwiner find_intertwiner(const CoproductFamily& source, const CoproductFamily& target,
                             HalfInt j1, HalfInt j2) {
    const auto s = realize(source, j1, j2);
    const auto t = realize(target, j1, j2);
    const int d = s.dim();
    const int dd = d * d;
    if (dd > 1024)
        throw DimensionTooLargeError("intertwiner search limited to 32-dimensional products");

    // vec(W S) - vec(T W) = (S^T (x) I - I (x) T) vec(W), column-major vec.
    const Matrix eye = Matrix::Identity(d, d);
    Matrix stacked(3 * dd, dd);
    const std::array<const Matrix*, 3> src{&s.dJp, &s.dJm, &s.dJ0};
    const std::array<const Matrix*, 3> tgt{&t.dJp, &t.dJm, &t.dJ0};
    for (int b = 0; b < 3; ++b)
        stacked.middleRows(b * dd, dd) =
            kron(src[static_cast<std::size_t>(b)]->transpose(), eye) -
            kron(eye, *tgt[static_cast<std::size_t>(b)]);

    Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double gate = 1e-8 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int nullity = 0;
    for (Eigen::Index i = sv.size() - 1; i >= 0 && sv(i) <= gate; --i) ++nullity;
    if (nullity == 0)
        throw NoIntertwinerError("no intertwiner between the requested coproducts on " +
                                 j1.to_string() + " (x) " + j2.to_string());

    // The nullspace may mix commutant blocks; individual basis vectors can be
    // rank-deficient, so also try a fixed generic combination before
    // unitarizing, and keep whichever candidate intertwines best.
    std::vector<Vector> candidates;
    for (int k = 0; k < nullity; ++k) candidates.push_back(svd.matrixV().col(dd - 1 - k));
    if (nullity > 1) {
        Vector mix = Vector::Zero(dd);
        unsigned state = 0x9e3779b9u;
        for (int k = 0; k < nullity; ++k) {
            state = state * 1664525u + 1013904223u;
            const double re = 0.25 + static_cast<double>(state % 1000) / 1000.0;
            state = state * 1664525u + 1013904223u;
            const double im = 0.25 + static_cast<double>(state % 1000) / 1000.0;
            mix += Complex(re, im) * candidates[static_cast<std::size_t>(k)];
        }
        candidates.push_back(mix);
    }

    Intertwiner best;
    best.source = source;
    best.target = target;
    best.nullspace_dim = nullity;
    best.residual = -1.0;
    for (const auto& vec : candidates) {
        Matrix w(d, d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r) w(r, c) = vec(c * d + r);
        const Matrix wu = nearest_unitary(w);
        const double res = verify_intertwiner(wu, source, target, j1, j2);
        if (best.residual < 0.0 || res < best.residual) {
            best.w = wu;
            best.residual = res;
        }
    }

    // A nonempty nullspace may hold only singular elements (rank-deficient
    // maps between inequivalent coproducts); the unitarized candidate then
    // fails to intertwine and there is no unitary solution.
    if (best.residual > 1e-8)
        throw NoIntertwinerError("nullspace contains no unitary intertwiner on " +
                                 j1.to_string() + " (x) " + j2.to_string() +
                                 " (best residual " + std::to_string(best.residual) + ")");
    return best;
}

}  // namespace qsu2
