#pragma once

#include "kd/adapt.hpp"
#include "kd/lattice.hpp"

namespace kd {

/// Period data of a symmetric complex torus: P = A/2 + iY with A integer
/// symmetric and Y rational symmetric positive definite, so the conjugate
/// period matrix is A - P by construction.
struct SymmetricPeriodData {
    int size = 0;
    IntMat A;
    RatMat Y;

    RatMat real_part() const; // A/2
};

/// Validates symmetry of A and exact positive definiteness of Y (leading
/// principal minors).
SymmetricPeriodData make_symmetric_period(const IntMat& A, const RatMat& Y);

/// Fixed locus of the conjugation involution on the torus C^s / (Z^s + P Z^s)
/// with conjugate period matrix A - P.  Writing points as P a + b, fixed
/// points have a = n/2 with A n even; each class of n mod 2 contributes one
/// component, a translate of the real torus swept by b.  The component count
/// is 2^(s - rank_2(A)) and depends only on A mod 2.
struct RealPartDescription {
    int size = 0;
    std::vector<std::vector<int>> representatives; // 0/1 vectors, zero vector first
    Int component_count = 0;
    int component_rank = 0; // real dimension of every component

    /// Torus offset of a representative in the a-coordinate, n/2.
    std::vector<Rat> alpha_offset(const std::vector<int>& rep) const;
};

RealPartDescription real_part_components(const IntMat& A);

/// The real Jacobian torus of a non-orientable surface: periods of the
/// normalized harmonic basis over the free part of first homology.  The
/// period normalization is read off the covering pipeline: each adapted basis
/// vector g_j projects to +-2 times one free-part basis element e_j, and the
/// j-th form is normalized by integral over e_j = +-1/2 accordingly.
struct KleinJacobian {
    int genus = 0;
    std::vector<GeneratorSymbol> basis_labels; // free-part basis of the base surface
    RatMat period_table;                       // rows follow basis_labels, one column per form
    Lattice lattice;                           // generated by the period table rows
};

KleinJacobian klein_jacobian(const SurfaceSpec& spec);

struct IsomorphismCheck {
    bool holds = false;
    RatMat scaling; // the witness map, -1/2 * identity
};

/// Each real component, in its b-coordinates, is R^s/Z^s; the map z -> -z/2
/// carries Z^s onto the Klein lattice iff the two lattices have equal
/// canonical forms.  Returns the verdict and the scaling matrix used.
IsomorphismCheck check_component_isomorphism(const KleinJacobian& kj,
                                             const RealPartDescription& rp);

} // namespace kd
