#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsu2/halfint.hpp"
#include "qsu2/irrep.hpp"
#include "qsu2/linalg.hpp"
#include "qsu2/qnum.hpp"

namespace qsu2 {

enum class FamilyKind { StandardDJ, Modified, ModifiedPrimed };

std::string to_string(FamilyKind kind);

/// A named coproduct variant: the standard Drinfeld-Jimbo coproduct, the
/// phase-modified coproduct, or its equivalent form in the primed generators.
/// n indexes the extra weight phases and is ignored for StandardDJ.
struct CoproductFamily {
    FamilyKind kind = FamilyKind::StandardDJ;
    QPoint q;
    int n = 0;

    friend bool operator==(const CoproductFamily&, const CoproductFamily&) = default;
};

/// Every family reduced to the two-term dressed form
///   D(J+-) = J+- (x) A+-(J0) + B+-(J0) (x) J+-,
///   D(J0)  = J0 (x) 1 + 1 (x) J0,
/// with invertible diagonal (group-like) dressings A, B, counit zero on all
/// generators, and antipode S(J+-) = s+- * J+- * W+-(J0), S(J0) = -J0.
/// The weight factor W is the identity except in the primed basis, where the
/// antipode picks up e^{-+2*i*n*pi*J0}.
class DressedCoproduct {
public:
    explicit DressedCoproduct(CoproductFamily family) : fam_(std::move(family)) {}

    Complex a_plus(HalfInt m) const;
    Complex a_minus(HalfInt m) const;
    Complex b_plus(HalfInt m) const;
    Complex b_minus(HalfInt m) const;

    /// sign = +1 for J+, -1 for J-.
    Complex antipode_scale(int sign) const;
    Complex antipode_weight(int sign, HalfInt m) const;

    const CoproductFamily& family() const { return fam_; }

private:
    CoproductFamily fam_;
};

inline DressedCoproduct dressing(const CoproductFamily& family) {
    return DressedCoproduct(family);
}

/// The spin-j representation a family acts in: q-deformed matrices unless
/// q = 1, where the classical ones apply.
Irrep family_irrep(const CoproductFamily& family, HalfInt j);

/// A coproduct realized as matrices on j1 (x) j2 in the lexicographic basis
/// |m1,m2> (m1 outer descending, m2 inner descending).
struct TensorRealization {
    CoproductFamily family;
    Irrep left, right;
    Matrix dJp, dJm, dJ0;

    int dim() const { return left.dim() * right.dim(); }
    std::pair<HalfInt, HalfInt> basis_weights(int index) const;
    HalfInt total_weight(int index) const;
};

TensorRealization realize(const CoproductFamily& family, HalfInt j1, HalfInt j2);

/// The opposite coproduct D' = sigma o D (Sweedler legs swapped).
TensorRealization realize_opposite(const CoproductFamily& family, HalfInt j1, HalfInt j2);

/// Max over generators of the max-norm of (realize - realize_opposite).
double cocommutativity_residual(const CoproductFamily& family, HalfInt j1, HalfInt j2);

/// || [dJp, dJm] - diag([2*m_total]) ||_max with the q-number taken at
/// relation_q. The one-argument form checks the family's own deformation
/// relation; passing q = 1 checks against the classical requisite 2*dJ0.
double verify_homomorphism(const TensorRealization& t, const QPoint& relation_q);
double verify_homomorphism(const TensorRealization& t);

/// Residual of (D (x) id) o D = (id (x) D) o D on j1 (x) j2 (x) j3, built
/// from the dressed form (the dressings are group-like).
double verify_coassociativity(const CoproductFamily& family, HalfInt j1, HalfInt j2, HalfInt j3);

/// Residual of (eps (x) id) o D = id = (id (x) eps) o D in the spin-j irrep,
/// with eps zero on generators and 1 on the group-like dressings.
double verify_counit(const CoproductFamily& family, HalfInt j);

/// Residual of m o (S (x) id) o D = eps(.) 1 = m o (id (x) S) o D in the
/// spin-j irrep, with S(dressing) = dressing^{-1}.
double verify_antipode(const CoproductFamily& family, HalfInt j);

/// Compatibility of the canonical conjugation with the realized coproduct:
/// max of ||dJp^dag - dJm||_max and ||dJ0^dag - dJ0||_max.
double verify_star(const TensorRealization& t);

}  // namespace qsu2
