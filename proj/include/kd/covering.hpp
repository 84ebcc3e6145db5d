#pragma once

#include "kd/surface.hpp"

namespace kd {

/// The orientation double cover of a non-orientable surface, built by polygon
/// gluing at the word level, together with everything the rest of the
/// pipeline needs at the homology level.
///
/// Construction: the base relator lifts to one relator per sheet; the two
/// polygons are glued by solving the sheet-2 relator for one generator and
/// substituting into the sheet-1 relator.  The glued relator is certified to
/// be a product of s = genus-1 commutators [x_j, y_j]; the x_j / y_j words
/// are the cover's standard generators.
///
/// Index convention: the sheet-2 commutator block enters the glued relator in
/// descending index order, so the conjugated pairs are
/// (t b_{n+1-j,2} t^-1, t a_{n+1-j,2} t^-1) for j = 1..n, with t the gluing
/// conjugator of the family.
///
/// Basis order of all matrices (basisBc):
///   odd genus:  (x1..x_{2n}, y1..y_{2n})
///   even genus: (x1, y1, x2..x_{2n+1}, y2..y_{2n+1})
///
/// projection_matrix rows follow the base generator order.  The row of the
/// generator carrying the homology torsion (c for odd genus, d for even) is
/// a Z/2 coordinate and is stored reduced to {0,1}; all other rows are exact
/// free-part coordinates.
struct CoveringData {
    SurfaceSpec spec;
    Presentation base;

    // Gluing data over the sheet-tagged alphabet.
    std::vector<GeneratorSymbol> lifted_letters; // surviving letters, fixed order
    Word relator_sheet1;                         // lift of the base relator, sheet 1
    Word relator_sheet2;                         // lift of the base relator, sheet 2
    GeneratorSymbol eliminated;                  // sheet-2 letter solved away by the gluing
    Word eliminated_solution;                    // its word in surviving letters
    Word glued_relator;                          // single relator after substitution
    GeneratorSymbol tree_edge;                   // collapsed base-point arc between the sheets

    // The cover as an abstract one-relator presentation, plus the realizing
    // words over the surviving lifted letters.
    Presentation double_cover;                   // generators x1..xs, y1..ys
    std::vector<Word> x_words, y_words;          // lifted-letter words for x_j / y_j
    std::vector<std::pair<GeneratorSymbol, Word>> sigma_words; // symmetry images, x/y alphabet
    Word basepoint_loop;                         // sigma^2 equals conjugation by this loop

    // Homology-level data.
    std::vector<GeneratorSymbol> basisB;         // free-part basis of H1(base)
    std::vector<GeneratorSymbol> basisBc;        // column order of the matrices below
    IntMat projection_matrix;                    // induced by the covering map
    int torsion_row = 0;                         // row of projection_matrix holding the Z/2 coordinate
    IntMat symmetry_matrix;                      // induced by the deck symmetry
    IntMat intersection;                         // intersection form on the cover

    /// Runs every internal consistency check; throws internal_error on failure.
    void verify() const;
};

/// Builds the complex double of the surface.  Throws internal_error if any
/// step of the derivation fails its consistency check.
CoveringData complex_double(const SurfaceSpec& spec);

/// Intersection form of the cover in the canonical basis order, without
/// building the full covering data.
IntMat intersection_form(const SurfaceSpec& spec);

/// True when u and v represent the same element modulo the normal closure of
/// the relator, certified by greedily deleting rotations of the relator from
/// u * v^-1.  A `false` only means no certificate was found within the
/// iteration bound; callers treat it as a bug signal, not as a decision
/// procedure.
bool equal_mod_relator(const Word& u, const Word& v, const Word& relator, int max_steps = 64);

} // namespace kd
