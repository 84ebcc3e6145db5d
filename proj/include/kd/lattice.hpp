#pragma once

#include "kd/normal_form.hpp"

namespace kd {

/// A finitely generated lattice in Q^dim, stored by a generating set of
/// columns.  The canonical form is the pair (q, H): a common denominator q
/// and the column Hermite form H of the cleared-denominator generators, with
/// gcd(content(H), q) divided out and zero columns dropped.  Two lattices are
/// equal iff their canonical forms coincide.
class Lattice {
public:
    Lattice() = default;

    static Lattice from_columns(int dim, const RatMat& generators);
    static Lattice from_rows(const RatMat& generators);
    /// scale * Z^dim
    static Lattice scaled_standard(int dim, const Rat& scale);

    int dim() const { return dim_; }
    int rank() const { return canonical_.cols(); }
    const RatMat& generators() const { return generators_; }

    Int denominator() const { return denominator_; }
    const IntMat& canonical_numerator() const { return canonical_; }

    /// Canonical basis as rational columns (canonical_numerator / denominator).
    RatMat canonical_basis() const;

    bool operator==(const Lattice& o) const = default;

private:
    int dim_ = 0;
    RatMat generators_;
    Int denominator_ = 1;
    IntMat canonical_;
};

/// True iff the two lattices have the same ambient dimension and identical
/// canonical forms; a rank mismatch yields false.
bool lattice_equal(const Lattice& a, const Lattice& b);

} // namespace kd
