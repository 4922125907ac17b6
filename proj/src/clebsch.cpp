#include "qsu2/clebsch.hpp"

#include <Eigen/SVD>
#include <complex>
#include <map>

#include "qsu2/errors.hpp"

namespace qsu2 {

std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Symmetric: return "symmetric";
        case SymmetryClass::Antisymmetric: return "antisymmetric";
        case SymmetryClass::Mixed: return "mixed";
    }
    return "?";
}

namespace {

constexpr double kKernelTol = 1e-8;

std::vector<int> weight_indices(const TensorRealization& t, HalfInt m) {
    std::vector<int> out;
    for (int i = 0; i < t.dim(); ++i)
        if (t.total_weight(i) == m) out.push_back(i);
    return out;
}

void fix_phase(Vector& v) {
    const double peak = max_abs(v);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-8 * peak) {
            const Complex c = v(i);
            v *= std::conj(c) / std::abs(c);
            return;
        }
    }
}

}  // namespace

std::vector<CGState> cg_decompose(const CoproductFamily& family, HalfInt j1, HalfInt j2) {
    const auto t = realize(family, j1, j2);
    std::vector<CGState> out;

    for (HalfInt total = j1 + j2; total >= (j1 - j2).abs(); total = total - HalfInt::whole(1)) {
        const auto idx = weight_indices(t, total);
        const auto up = weight_indices(t, total + HalfInt::whole(1));
        const int w = static_cast<int>(idx.size());

        // Previous towers each contribute one state at this weight.
        Matrix prev(w, 0);
        for (const auto& s : out) {
            if (s.m != total) continue;
            prev.conservativeResize(w, prev.cols() + 1);
            for (int r = 0; r < w; ++r) prev(r, prev.cols() - 1) = s.coeffs(idx[static_cast<std::size_t>(r)]);
        }

        // Orthonormal basis of the complement of the previous towers.
        Matrix complement;
        if (prev.cols() == 0) {
            complement = Matrix::Identity(w, w);
        } else {
            Eigen::JacobiSVD<Matrix> svd(prev, Eigen::ComputeFullU);
            complement = svd.matrixU().rightCols(w - static_cast<int>(prev.cols()));
        }

        Vector head;
        if (up.empty()) {
            if (complement.cols() != 1)
                throw KernelDimensionMismatchError(
                    "top weight space of " + j1.to_string() + " (x) " + j2.to_string() +
                    " has kernel dimension " + std::to_string(complement.cols()));
            head = complement.col(0);
        } else {
            Matrix raising(static_cast<int>(up.size()), w);
            for (std::size_t r = 0; r < up.size(); ++r)
                for (int c = 0; c < w; ++c)
                    raising(static_cast<int>(r), c) = t.dJp(up[r], idx[static_cast<std::size_t>(c)]);
            const Matrix restricted = raising * complement;

            Eigen::JacobiSVD<Matrix> svd(restricted, Eigen::ComputeFullV);
            const auto& sv = svd.singularValues();
            const double gate = kKernelTol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
            int rank = 0;
            for (Eigen::Index i = 0; i < sv.size(); ++i)
                if (sv(i) > gate) ++rank;
            const int nullity = static_cast<int>(complement.cols()) - rank;
            if (nullity != 1)
                throw KernelDimensionMismatchError(
                    "weight space m=" + total.to_string() + " of " + j1.to_string() + " (x) " +
                    j2.to_string() + " has kernel dimension " + std::to_string(nullity) +
                    " (degenerate q)");
            head = complement * svd.matrixV().col(complement.cols() - 1);
        }

        fix_phase(head);
        head.normalize();

        Vector full = Vector::Zero(t.dim());
        for (int r = 0; r < w; ++r) full(idx[static_cast<std::size_t>(r)]) = head(r);
        out.push_back({total, total, full, family, j1, j2});

        Vector cur = full;
        for (HalfInt m = total - HalfInt::whole(1); m >= -total; m = m - HalfInt::whole(1)) {
            cur = t.dJm * cur;
            const double norm = cur.norm();
            if (norm < 1e-10)
                throw KernelDimensionMismatchError("lowering tower J=" + total.to_string() +
                                                   " collapsed at m=" + m.to_string() +
                                                   " (degenerate q)");
            cur /= norm;
            out.push_back({total, m, cur, family, j1, j2});
        }
    }
    return out;
}

SymmetryClass classify_symmetry(const CGState& state, double tol) {
    if (state.j1 != state.j2)
        throw NotIdenticalFactorsError("exchange symmetry undefined for " + state.j1.to_string() +
                                       " (x) " + state.j2.to_string());
    const int d = state.j1.twice + 1;
    Vector flipped(state.coeffs.size());
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) flipped(k * d + i) = state.coeffs(i * d + k);
    if (max_abs(Vector(flipped - state.coeffs)) <= tol) return SymmetryClass::Symmetric;
    if (max_abs(Vector(flipped + state.coeffs)) <= tol) return SymmetryClass::Antisymmetric;
    return SymmetryClass::Mixed;
}

double verify_multiplet(const std::vector<CGState>& states, const TensorRealization& t) {
    double res = 0.0;
    for (const auto& s : states) {
        Vector shifted = t.dJ0 * s.coeffs - s.m.value() * s.coeffs;
        res = std::max(res, max_abs(shifted));
        if (s.m == s.j_total) res = std::max(res, max_abs(Vector(t.dJp * s.coeffs)));
        if (s.m == -s.j_total) res = std::max(res, max_abs(Vector(t.dJm * s.coeffs)));
    }
    const auto n = static_cast<Eigen::Index>(states.size());
    Matrix gram(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b)
            gram(a, b) = states[static_cast<std::size_t>(a)].coeffs.dot(
                states[static_cast<std::size_t>(b)].coeffs);
    res = std::max(res, max_abs(Matrix(gram - Matrix::Identity(n, n))));
    return res;
}

}  // namespace qsu2
