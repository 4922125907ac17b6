#pragma once

#include <vector>

#include "qsu2/halfint.hpp"
#include "qsu2/hopf.hpp"
#include "qsu2/linalg.hpp"

namespace qsu2 {

/// One state of a decomposed multiplet, as coefficients over the lexicographic
/// product basis. Unit norm; dJ0 eigenvector with eigenvalue m.
struct CGState {
    HalfInt j_total;
    HalfInt m;
    Vector coeffs;
    CoproductFamily family;
    HalfInt j1, j2;
};

enum class SymmetryClass { Symmetric, Antisymmetric, Mixed };

std::string to_string(SymmetryClass c);

/// Decompose j1 (x) j2 into multiplets under the family's coproduct.
/// Highest-weight vectors come from the kernel of dJp on each weight space
/// (orthogonal to the towers already found); the rest of each tower is
/// generated by dJm with renormalization only, so lowered states keep
/// whatever phase the operator produces. The top of each tower is phased so
/// its first nonzero coefficient is real positive.
/// Throws KernelDimensionMismatchError when a kernel is not one-dimensional
/// (q at a degenerate root of unity).
std::vector<CGState> cg_decompose(const CoproductFamily& family, HalfInt j1, HalfInt j2);

/// Apply the canonical flip to a state of identical factors and classify.
/// Throws NotIdenticalFactorsError when j1 != j2.
SymmetryClass classify_symmetry(const CGState& state, double tol = 1e-10);

/// Residual max over: dJ0 eigenvalue errors, dJp annihilating each
/// highest-weight state, tower closure under dJm, and orthonormality of the
/// full set.
double verify_multiplet(const std::vector<CGState>& states, const TensorRealization& t);

}  // namespace qsu2
