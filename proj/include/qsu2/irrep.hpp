#pragma once

#include <vector>

#include "qsu2/halfint.hpp"
#include "qsu2/linalg.hpp"
#include "qsu2/qnum.hpp"

namespace qsu2 {

/// Spin-j irreducible representation. Basis order is |j,j>, |j,j-1>, ...,
/// |j,-j> (descending m), so J0 = diag(j, j-1, ..., -j).
struct Irrep {
    HalfInt j;
    QPoint q;
    bool deformed = false;
    Matrix Jp, Jm, J0;

    int dim() const { return j.twice + 1; }
    std::vector<HalfInt> weights() const { return weights_descending(j); }
};

/// J+-|j,m> = sqrt((j-+m)(j+-m+1)) |j,m+-1>.
Irrep build_classical_irrep(HalfInt j);

/// Matrix elements with (j-+m)(j+-m+1) replaced by [j-+m][j+-m+1]; square
/// roots take the principal branch.
Irrep build_q_irrep(HalfInt j, const QPoint& q);

/// Jp*Jm + J0^2 - J0 (classical) or Jp*Jm + diag([m][m-1]) (deformed); a
/// scalar multiple of the identity, j(j+1) resp. [j][j+1].
Matrix casimir_matrix(const Irrep& rep);

}  // namespace qsu2
