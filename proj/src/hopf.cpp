#include "qsu2/hopf.hpp"

#include <stdexcept>

#include "qsu2/errors.hpp"

namespace qsu2 {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::StandardDJ: return "standard";
        case FamilyKind::Modified: return "modified";
        case FamilyKind::ModifiedPrimed: return "modified-primed";
    }
    return "?";
}

Complex DressedCoproduct::a_plus(HalfInt m) const {
    switch (fam_.kind) {
        case FamilyKind::StandardDJ: return q_power(fam_.q, m);
        case FamilyKind::Modified:  // q^m e^{+i n pi m}
            return q_power(fam_.q, m) * quarter_turn(fam_.n * m.twice);
        case FamilyKind::ModifiedPrimed:  // q^m e^{+2 i n pi m}
            return q_power(fam_.q, m) * quarter_turn(2 * fam_.n * m.twice);
    }
    return {};
}

Complex DressedCoproduct::a_minus(HalfInt m) const {
    switch (fam_.kind) {
        case FamilyKind::StandardDJ: return q_power(fam_.q, m);
        case FamilyKind::Modified:
            return q_power(fam_.q, m) * quarter_turn(-fam_.n * m.twice);
        case FamilyKind::ModifiedPrimed:
            return q_power(fam_.q, m) * quarter_turn(-2 * fam_.n * m.twice);
    }
    return {};
}

Complex DressedCoproduct::b_plus(HalfInt m) const {
    switch (fam_.kind) {
        case FamilyKind::StandardDJ: return q_power(fam_.q, -m);
        case FamilyKind::Modified:  // e^{-i n pi m} q^{-m}
            return quarter_turn(-fam_.n * m.twice) * q_power(fam_.q, -m);
        case FamilyKind::ModifiedPrimed: return q_power(fam_.q, -m);
    }
    return {};
}

Complex DressedCoproduct::b_minus(HalfInt m) const {
    switch (fam_.kind) {
        case FamilyKind::StandardDJ: return q_power(fam_.q, -m);
        case FamilyKind::Modified:
            return quarter_turn(fam_.n * m.twice) * q_power(fam_.q, -m);
        case FamilyKind::ModifiedPrimed: return q_power(fam_.q, -m);
    }
    return {};
}

Complex DressedCoproduct::antipode_scale(int sign) const {
    const HalfInt unit = HalfInt::whole(sign >= 0 ? 1 : -1);
    switch (fam_.kind) {
        case FamilyKind::StandardDJ: return -q_power(fam_.q, unit);
        case FamilyKind::Modified:  // -e^{i n pi} q^{+-1}
            return -quarter_turn(2 * fam_.n) * q_power(fam_.q, unit);
        case FamilyKind::ModifiedPrimed: return -q_power(fam_.q, unit);
    }
    return {};
}

Complex DressedCoproduct::antipode_weight(int sign, HalfInt m) const {
    if (fam_.kind != FamilyKind::ModifiedPrimed) return {1.0, 0.0};
    // S(J+-') = -q^{+-1} J+-' e^{-+2 i n pi J0}
    const int direction = sign >= 0 ? -1 : 1;
    return quarter_turn(2 * direction * fam_.n * m.twice);
}

Irrep family_irrep(const CoproductFamily& family, HalfInt j) {
    if (family.q == QPoint::one()) return build_classical_irrep(j);
    return build_q_irrep(j, family.q);
}

std::pair<HalfInt, HalfInt> TensorRealization::basis_weights(int index) const {
    const int d2 = right.dim();
    const int i1 = index / d2;
    const int i2 = index % d2;
    return {HalfInt(left.j.twice - 2 * i1), HalfInt(right.j.twice - 2 * i2)};
}

HalfInt TensorRealization::total_weight(int index) const {
    const auto [m1, m2] = basis_weights(index);
    return m1 + m2;
}

namespace {

template <typename Fn>
Matrix weight_diagonal(const Irrep& rep, Fn&& fn) {
    Matrix out = Matrix::Zero(rep.dim(), rep.dim());
    const auto w = rep.weights();
    for (int k = 0; k < rep.dim(); ++k) out(k, k) = fn(w[static_cast<std::size_t>(k)]);
    return out;
}

TensorRealization realize_impl(const CoproductFamily& family, HalfInt j1, HalfInt j2,
                               bool opposite) {
    TensorRealization t;
    t.family = family;
    t.left = family_irrep(family, j1);
    t.right = family_irrep(family, j2);

    const DressedCoproduct dr(family);
    const auto ap = [&](HalfInt m) { return dr.a_plus(m); };
    const auto am = [&](HalfInt m) { return dr.a_minus(m); };
    const auto bp = [&](HalfInt m) { return dr.b_plus(m); };
    const auto bm = [&](HalfInt m) { return dr.b_minus(m); };

    const Matrix i1 = Matrix::Identity(t.left.dim(), t.left.dim());
    const Matrix i2 = Matrix::Identity(t.right.dim(), t.right.dim());

    if (!opposite) {
        t.dJp = kron(t.left.Jp, weight_diagonal(t.right, ap)) +
                kron(weight_diagonal(t.left, bp), t.right.Jp);
        t.dJm = kron(t.left.Jm, weight_diagonal(t.right, am)) +
                kron(weight_diagonal(t.left, bm), t.right.Jm);
    } else {
        t.dJp = kron(t.left.Jp, weight_diagonal(t.right, bp)) +
                kron(weight_diagonal(t.left, ap), t.right.Jp);
        t.dJm = kron(t.left.Jm, weight_diagonal(t.right, bm)) +
                kron(weight_diagonal(t.left, am), t.right.Jm);
    }
    t.dJ0 = kron(t.left.J0, i2) + kron(i1, t.right.J0);
    return t;
}

}  // namespace

TensorRealization realize(const CoproductFamily& family, HalfInt j1, HalfInt j2) {
    return realize_impl(family, j1, j2, false);
}

TensorRealization realize_opposite(const CoproductFamily& family, HalfInt j1, HalfInt j2) {
    return realize_impl(family, j1, j2, true);
}

double cocommutativity_residual(const CoproductFamily& family, HalfInt j1, HalfInt j2) {
    const auto t = realize(family, j1, j2);
    const auto o = realize_opposite(family, j1, j2);
    double res = max_abs(Matrix(t.dJp - o.dJp));
    res = std::max(res, max_abs(Matrix(t.dJm - o.dJm)));
    res = std::max(res, max_abs(Matrix(t.dJ0 - o.dJ0)));
    return res;
}

double verify_homomorphism(const TensorRealization& t, const QPoint& relation_q) {
    Matrix c = t.dJp * t.dJm - t.dJm * t.dJp;
    for (int i = 0; i < t.dim(); ++i) {
        const HalfInt twice_total = HalfInt(2 * t.total_weight(i).twice);  // 2*m as HalfInt
        c(i, i) -= q_number(relation_q, twice_total);
    }
    return max_abs(c);
}

double verify_homomorphism(const TensorRealization& t) {
    return verify_homomorphism(t, t.family.q);
}

double verify_coassociativity(const CoproductFamily& family, HalfInt j1, HalfInt j2,
                              HalfInt j3) {
    const long dim = static_cast<long>(j1.twice + 1) * (j2.twice + 1) * (j3.twice + 1);
    if (dim > 512)
        throw DimensionTooLargeError("coassociativity check limited to total dimension 512");

    const auto t12 = realize(family, j1, j2);
    const auto t23 = realize(family, j2, j3);
    const Irrep r1 = family_irrep(family, j1);
    const Irrep r2 = family_irrep(family, j2);
    const Irrep r3 = family_irrep(family, j3);
    const DressedCoproduct dr(family);

    const Matrix i1 = Matrix::Identity(r1.dim(), r1.dim());
    const Matrix i12 = Matrix::Identity(t12.dim(), t12.dim());
    const Matrix i23 = Matrix::Identity(t23.dim(), t23.dim());
    const Matrix i3 = Matrix::Identity(r3.dim(), r3.dim());

    double res = 0.0;
    for (const int sign : {+1, -1}) {
        const auto a = [&](HalfInt m) { return sign > 0 ? dr.a_plus(m) : dr.a_minus(m); };
        const auto b = [&](HalfInt m) { return sign > 0 ? dr.b_plus(m) : dr.b_minus(m); };
        const Matrix& x12 = sign > 0 ? t12.dJp : t12.dJm;
        const Matrix& x23 = sign > 0 ? t23.dJp : t23.dJm;
        const Matrix& x1 = sign > 0 ? r1.Jp : r1.Jm;
        const Matrix& x3 = sign > 0 ? r3.Jp : r3.Jm;

        // (D (x) id) D(x) = D(x) (x) A + (B (x) B) (x) x
        const Matrix lhs = kron(x12, weight_diagonal(r3, a)) +
                           kron(kron(weight_diagonal(r1, b), weight_diagonal(r2, b)), x3);
        // (id (x) D) D(x) = x (x) (A (x) A) + B (x) D(x)
        const Matrix rhs = kron(x1, kron(weight_diagonal(r2, a), weight_diagonal(r3, a))) +
                           kron(weight_diagonal(r1, b), x23);
        res = std::max(res, max_abs(Matrix(lhs - rhs)));
    }
    const Matrix lhs0 = kron(t12.dJ0, i3) + kron(i12, r3.J0);
    const Matrix rhs0 = kron(r1.J0, i23) + kron(i1, t23.dJ0);
    return std::max(res, max_abs(Matrix(lhs0 - rhs0)));
}

double verify_counit(const CoproductFamily& family, HalfInt j) {
    const Irrep rep = family_irrep(family, j);
    const DressedCoproduct dr(family);
    const HalfInt zero;

    double res = 0.0;
    for (const int sign : {+1, -1}) {
        const Matrix& x = sign > 0 ? rep.Jp : rep.Jm;
        const Complex eps_a = sign > 0 ? dr.a_plus(zero) : dr.a_minus(zero);
        const Complex eps_b = sign > 0 ? dr.b_plus(zero) : dr.b_minus(zero);
        res = std::max(res, max_abs(Matrix(eps_b * x - x)));  // (eps (x) id) D
        res = std::max(res, max_abs(Matrix(eps_a * x - x)));  // (id (x) eps) D
    }
    // D(J0) has identity dressings, so both sides reproduce J0 exactly.
    res = std::max(res, max_abs(Matrix(rep.J0 - rep.J0)));
    return res;
}

double verify_antipode(const CoproductFamily& family, HalfInt j) {
    const Irrep rep = family_irrep(family, j);
    const DressedCoproduct dr(family);

    double res = 0.0;
    for (const int sign : {+1, -1}) {
        const Matrix& x = sign > 0 ? rep.Jp : rep.Jm;
        const auto a = [&](HalfInt m) { return sign > 0 ? dr.a_plus(m) : dr.a_minus(m); };
        const auto b = [&](HalfInt m) { return sign > 0 ? dr.b_plus(m) : dr.b_minus(m); };
        const Matrix sx = dr.antipode_scale(sign) *
                          (x * weight_diagonal(rep, [&](HalfInt m) {
                               return dr.antipode_weight(sign, m);
                           }));
        const Matrix a_diag = weight_diagonal(rep, a);
        const Matrix b_diag = weight_diagonal(rep, b);
        const Matrix a_inv = weight_diagonal(rep, [&](HalfInt m) { return 1.0 / a(m); });
        const Matrix b_inv = weight_diagonal(rep, [&](HalfInt m) { return 1.0 / b(m); });

        // m o (S (x) id) o D(x) = S(x) A + S(B) x = 0
        res = std::max(res, max_abs(Matrix(sx * a_diag + b_inv * x)));
        // m o (id (x) S) o D(x) = x S(A) + B S(x) = 0
        res = std::max(res, max_abs(Matrix(x * a_inv + b_diag * sx)));
    }
    // J0 is primitive: S(J0) + J0 = 0 on both sides.
    res = std::max(res, max_abs(Matrix(-rep.J0 + rep.J0)));
    return res;
}

double verify_star(const TensorRealization& t) {
    const double plus = max_abs(Matrix(t.dJp.adjoint() - t.dJm));
    const double zero = max_abs(Matrix(t.dJ0.adjoint() - t.dJ0));
    return std::max(plus, zero);
}

}  // namespace qsu2
