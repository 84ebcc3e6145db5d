#pragma once

#include "kd/matrix.hpp"

namespace kd {

/// Unimodular decomposition U * input * V = D.
struct NormalFormResult {
    IntMat U;
    IntMat D;
    IntMat V;
};

/// Smith normal form: D diagonal with d1 | d2 | ..., all di >= 0,
/// U and V unimodular.
NormalFormResult smith_normal_form(const IntMat& m);

/// Column-style Hermite normal form: D = m * V with V unimodular.
/// Pivot rows strictly increase left to right, pivots are positive, and in a
/// pivot's row every entry in an earlier column is reduced into [0, pivot).
/// Zero columns are pushed to the right.  U is the identity.
/// This is the canonical representative of the column span used for lattice
/// equality throughout the project.
NormalFormResult hermite_normal_form(const IntMat& m);

} // namespace kd
