#pragma once

#include "kd/normal_form.hpp"
#include "kd/word.hpp"

namespace kd {

/// Even-genus surfaces have two standard one-relator presentations.
///   cc_dd:       c^2 d^2 [a1,b1]...[an,bn] = 1
///   gamma_delta: c d c^-1 d [a1,b1]...[an,bn] = 1
/// (the gamma-delta generators are named c and d as well).
enum class PresentationVariant { cc_dd, gamma_delta };

std::string to_string(PresentationVariant v);
PresentationVariant parse_variant(const std::string& text);

/// A compact non-orientable surface of genus >= 3.  Odd genus g = 2n+1, even
/// genus g = 2n+2; `variant` selects the even-genus presentation and is
/// ignored for odd genus.
struct SurfaceSpec {
    int genus = 3;
    PresentationVariant variant = PresentationVariant::cc_dd;

    SurfaceSpec() = default;
    SurfaceSpec(int g, PresentationVariant v = PresentationVariant::cc_dd);

    bool odd() const { return genus % 2 == 1; }
    int n() const { return odd() ? (genus - 1) / 2 : (genus - 2) / 2; }
    /// Rank of the free part of first homology, also the complex-double genus.
    int homology_rank() const { return genus - 1; }
};

/// The standard one-relator presentation of the fundamental group:
/// generators (c[,d], a1..an, b1..bn) in that order.
///   odd genus:   c^2 [a1,b1]...[an,bn] = 1
///   even genus:  per `variant`, see PresentationVariant.
Presentation standard_presentation(const SurfaceSpec& spec);

/// Orientation character: 1 on generators whose regular neighbourhood in the
/// surface is a Moebius band, 0 otherwise.  Its kernel is the fundamental
/// group of the orientation double cover.
/// odd: w(c)=1; even cc-dd: w(c)=w(d)=1; even gamma-delta: w(c)=1, w(d)=0.
std::vector<int> orientation_character(const SurfaceSpec& spec);

struct HomologyInvariants {
    int free_rank = 0;
    std::vector<Int> torsion; // nontrivial invariant factors, ascending

    bool operator==(const HomologyInvariants&) const = default;
};

/// First integral homology of a presented group: abelianizes the relators
/// into a relation matrix and reads rank and invariant factors off its Smith
/// form.
HomologyInvariants homology_invariants(const Presentation& p);

} // namespace kd
