#pragma once

#include "kd/normal_form.hpp"

namespace kd {

/// Affine solution set of A x = b over the rationals:
/// x = particular + nullspace * t.  Nullspace columns are primitive integer
/// vectors (denominators cleared, content divided out).
struct RationalAffineSet {
    bool consistent = false;
    RatMat particular; // n x 1
    RatMat nullspace;  // n x d
};

RationalAffineSet solve_rational(const RatMat& A, const RatMat& b);

/// Affine set of integer solutions of A x = b, computed through the Smith
/// form: x = particular + basis * t with t ranging over Z^d.
struct IntegerAffineSet {
    bool consistent = false;
    std::vector<Int> particular;
    IntMat basis; // n x d
};

IntegerAffineSet solve_integer(const IntMat& A, const std::vector<Int>& b);

} // namespace kd
