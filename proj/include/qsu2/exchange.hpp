#pragma once

#include "qsu2/halfint.hpp"
#include "qsu2/hopf.hpp"
#include "qsu2/linalg.hpp"

namespace qsu2 {

/// The constant 4x4 matrices on the spin-1/2 (x) spin-1/2 lexicographic basis
/// {++, +-, -+, --}.
Matrix golden_U();
Matrix golden_P();
Matrix golden_Pprime();

/// Heisenberg-magnet exchange with eta = +1 (ferromagnetic) or -1
/// (antiferromagnetic); eta_P(+1) == golden_P(), eta_P(-1) == golden_Pprime().
Matrix eta_P(int eta);

/// Max over generators of || W * D_source(x) * W^dag - D_target(x) ||_max.
double verify_intertwiner(const Matrix& w, const CoproductFamily& source,
                          const CoproductFamily& target, HalfInt j1, HalfInt j2);

struct Intertwiner {
    Matrix w;
    CoproductFamily source, target;
    double residual = 0.0;
    /// Dimension of the solution space; > 1 means the answer is only defined
    /// up to the commutant of the target coproduct.
    int nullspace_dim = 0;
};

/// Solve W * D_source(x) = D_target(x) * W for x in {J+, J-, J0} as a stacked
/// SVD nullspace problem, project a solution to the nearest unitary, and
/// report the residual and nullspace multiplicity. Throws NoIntertwinerError
/// when the nullspace is empty at tolerance 1e-8.
Intertwiner find_intertwiner(const CoproductFamily& source, const CoproductFamily& target,
                             HalfInt j1, HalfInt j2);

}  // namespace qsu2
