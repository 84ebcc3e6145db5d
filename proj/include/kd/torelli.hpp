#pragma once

#include "kd/covering.hpp"
#include "kd/linsolve.hpp"

namespace kd {

/// Constraints a lift of a homology-trivial map must satisfy on the cover's
/// homology: P F = P (torsion row mod 2), F S = S F, and F^t J F = eps J.
/// The two linear families are assembled into one exact integer system over
/// the entries of F plus one parity slack per column for the torsion row; the
/// quadratic intersection constraint stays symbolic.
struct LiftConstraintSystem {
    SurfaceSpec spec;
    int orientation = 1; // +1 preserving, -1 reversing
    int size = 0;        // side of F, = 2(genus-1)

    IntMat projection;
    int torsion_row = 0;
    IntMat symmetry;
    IntMat intersection;

    IntMat lin_lhs;           // linear constraints, unknowns = vec(F) | slacks
    std::vector<Int> lin_rhs;

    int unknowns() const { return size * size + size; }
    int f_index(int row, int col) const { return row * size + col; }

    /// (Re)builds lin_lhs / lin_rhs from projection, torsion_row and symmetry.
    void assemble_linear_system();

    /// The distinguished solution of this orientation: identity or the
    /// symmetry matrix.
    IntMat expected_solution() const;

    /// Exact check of all three constraint families against a concrete F.
    bool satisfied_by(const IntMat& F) const;
};

LiftConstraintSystem build_lift_constraints(const SurfaceSpec& spec, int orientation);
LiftConstraintSystem build_lift_constraints(const CoveringData& cover, int orientation);

enum class LiftMethod { staged_elimination, bounded_enumeration };

std::string to_string(LiftMethod m);

struct LiftClassification {
    std::vector<IntMat> solutions; // sorted, deduplicated
    LiftMethod method = LiftMethod::staged_elimination;
    std::vector<std::string> trace;
};

/// Solves the constraint system by staged elimination: the linear families
/// are solved exactly over the rationals, the symplectic residual is expanded
/// on the affine solution set, and linear polynomials found in the residual
/// are repeatedly solved and substituted back until the residual vanishes.
/// Every returned matrix is re-verified against the exact constraints.
/// If a nonlinear residual survives the fixpoint, falls back to
/// enumerate_lifts_oracle(fallback_bound) and reports the method accordingly.
LiftClassification classify_lifts(const LiftConstraintSystem& system, bool want_trace = false,
                                  int fallback_bound = 2, Int enum_limit = Int(10'000'000));

/// Independent brute-force check: the integer affine solution set of the
/// linear constraints is computed through the Smith form, every parameter
/// point with coordinates in [-bound, bound] is swept, and the exact
/// symplectic condition filters the survivors.  The sweep runs depth first
/// and drops a prefix only when a residual polynomial that is fully
/// determined by the assigned parameters is nonzero, so the result equals
/// the flat sweep of the whole box.  Throws domain_error once more than
/// `limit` candidate prefixes have been examined.
LiftClassification enumerate_lifts_oracle(const LiftConstraintSystem& system, int bound,
                                          Int limit = Int(10'000'000));

} // namespace kd
