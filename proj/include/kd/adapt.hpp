#pragma once

#include "kd/covering.hpp"

namespace kd {

/// The standard symplectic form [[0, I], [-I, 0]] of size 2s.
IntMat standard_symplectic_form(int s);

/// True iff C^t J C = J exactly.
bool is_symplectic_change(const IntMat& C, const IntMat& J);

struct AdaptedBasis {
    IntMat C; // columns: g_1..g_s, d_1..d_s in the covering basis order
    IntMat A; // symmetric integer block
};

/// Produces a symplectic basis adapted to an anti-symplectic involution:
///   C^t J C   = standard_symplectic_form(s)
///   C^-1 S C  = [[I, A], [0, -I]]  with A = A^t integer.
/// The first try is the closed-form pattern for the covering families (fixed
/// vectors paired across the anti-diagonal blocks); if the input does not
/// match or a postcondition fails, a general construction from the fixed
/// lattice of S takes over.  Postconditions are re-verified on every call.
AdaptedBasis adapt_basis(const IntMat& S, const IntMat& J);

} // namespace kd
