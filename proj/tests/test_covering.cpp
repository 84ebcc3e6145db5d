#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

#include "kd/covering.hpp"

using namespace kd;
using namespace kdtest;

namespace {

// Independent oracle for the intersection pairing of the one-relator surface
// presentation: each generator occurs twice in the relator with opposite
// exponents; two generators pair by the signed interleaving of their
// occurrence pairs (chord-crossing rule on the polygon).
Int pairing_from_relator(const Word& rel, const GeneratorSymbol& x, const GeneratorSymbol& y)
{
    const auto& ls = rel.letters();
    const int L = static_cast<int>(ls.size());
    int xp = -1, xm = -1, yp = -1, ym = -1;
    for (int i = 0; i < L; ++i) {
        if (ls[i].gen == x) (ls[i].exp == 1 ? xp : xm) = i;
        if (ls[i].gen == y) (ls[i].exp == 1 ? yp : ym) = i;
    }
    REQUIRE(xp >= 0);
    REQUIRE(xm >= 0);
    REQUIRE(yp >= 0);
    REQUIRE(ym >= 0);
    auto inside = [&](int q) {
        // strictly between xp and xm walking forward (cyclically) from xp
        int span = (xm - xp + L) % L;
        int off = (q - xp + L) % L;
        return off > 0 && off < span;
    };
    return Int(inside(yp) ? 1 : 0) - Int(inside(ym) ? 1 : 0);
}

IntMat oracle_intersection(const CoveringData& cd)
{
    const int m = static_cast<int>(cd.basisBc.size());
    const Word& rel = cd.double_cover.relators[0];
    IntMat J(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            J(i, j) = pairing_from_relator(rel, cd.basisBc[i], cd.basisBc[j]);
        }
    return J;
}

IntMat mod2_torsion_row(IntMat m, int row)
{
    for (int j = 0; j < m.cols(); ++j) {
        Int v = m(row, j) % 2;
        m(row, j) = v < 0 ? v + 2 : v;
    }
    return m;
}

} // namespace

TEST_CASE("interleaving oracle is calibrated on the torus relator")
{
    Presentation t;
    t.generators = {gen('a'), gen('b')};
    Word rel = Word::commutator(glet('a'), glet('b'));
    CHECK(pairing_from_relator(rel, gen('a'), gen('b')) == 1);
    CHECK(pairing_from_relator(rel, gen('b'), gen('a')) == -1);
    Word rel2 = Word::commutator(glet('b'), glet('a'));
    CHECK(pairing_from_relator(rel2, gen('a'), gen('b')) == -1);
}

TEST_CASE("genus 3 covering anchors")
{
    auto cd = complex_double(SurfaceSpec(3));

    SUBCASE("symmetry is the size-4 anti-diagonal")
    {
        IntMat K{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
        CHECK(cd.symmetry_matrix == K);
    }
    SUBCASE("projection matrix in rows (c, a1, b1)")
    {
        IntMat pi{{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}};
        CHECK(cd.projection_matrix == pi);
        CHECK(cd.torsion_row == 0);
    }
    SUBCASE("intersection form")
    {
        IntMat J{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
        CHECK(cd.intersection == J);
        CHECK(intersection_form(SurfaceSpec(3)) == J);
    }
    SUBCASE("gluing solves the sheet-2 relator for the crossing letter")
    {
        CHECK(cd.eliminated == gen('c', 0, 2));
        Word expected = Word::commutator(glet('b', 1, 2), glet('a', 1, 2)) * glet('c', 0, 1, -1);
        CHECK(cd.eliminated_solution == expected);
    }
    SUBCASE("cover generator words")
    {
        Word c1 = glet('c', 0, 1);
        CHECK(cd.x_words[0] == glet('b', 1, 2).conjugate(c1));
        CHECK(cd.y_words[0] == glet('a', 1, 2).conjugate(c1));
        CHECK(cd.x_words[1] == glet('a', 1, 1));
        CHECK(cd.y_words[1] == glet('b', 1, 1));
    }
    SUBCASE("symmetry word images")
    {
        Word x1 = Word::letter(cd.basisBc[0]); // x1
        Word y1 = Word::letter(GeneratorSymbol{"y", 1, 0});
        Word x2 = Word::letter(GeneratorSymbol{"x", 2, 0});
        Word y2 = Word::letter(GeneratorSymbol{"y", 2, 0});
        Word W = Word::commutator(x1, y1);
        CHECK(cd.basepoint_loop == W);

        std::map<GeneratorSymbol, Word> sw(cd.sigma_words.begin(), cd.sigma_words.end());
        CHECK(sw.at(GeneratorSymbol{"x", 1, 0}) == y2.conjugate(W));
        CHECK(sw.at(GeneratorSymbol{"y", 1, 0}) == x2.conjugate(W));
        CHECK(sw.at(GeneratorSymbol{"x", 2, 0}) == y1);
        CHECK(sw.at(GeneratorSymbol{"y", 2, 0}) == x1);
    }
}

TEST_CASE("genus 4 cc-dd covering anchors")
{
    auto cd = complex_double(SurfaceSpec(4, PresentationVariant::cc_dd));

    SUBCASE("first-pair block of the symmetry and its involutivity")
    {
        IntMat M{{1, 0}, {2, -1}};
        CHECK(cd.symmetry_matrix.submatrix(0, 0, 2, 2) == M);
        CHECK(M * M == IntMat::identity(2));
        // the block decouples from the rest
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 6; ++j) {
                CHECK(cd.symmetry_matrix(i, j) == 0);
                CHECK(cd.symmetry_matrix(j, i) == 0);
            }
    }
    SUBCASE("intersection form has the 2x2 block on the first pair")
    {
        IntMat J(6, 6);
        J(0, 1) = 1;
        J(1, 0) = -1;
        J(2, 4) = 1;
        J(3, 5) = 1;
        J(4, 2) = -1;
        J(5, 3) = -1;
        CHECK(cd.intersection == J);
    }
    SUBCASE("gluing eliminates the second crossing letter")
    {
        CHECK(cd.eliminated == gen('d', 0, 2));
        Word expected = glet('c', 0, 1, -1) * glet('c', 0, 2, -1) *
                        Word::commutator(glet('b', 1, 2), glet('a', 1, 2)) * glet('d', 0, 1, -1);
        CHECK(cd.eliminated_solution == expected);
    }
}

TEST_CASE("genus 5 gluing uses descending sheet-2 indices")
{
    auto cd = complex_double(SurfaceSpec(5));
    Word expected = Word::commutator(glet('b', 2, 2), glet('a', 2, 2)) *
                    Word::commutator(glet('b', 1, 2), glet('a', 1, 2)) * glet('c', 0, 1, -1);
    CHECK(cd.eliminated_solution == expected);
}

TEST_CASE("covering invariants for genus 3..12, all variants")
{
    std::vector<SurfaceSpec> specs;
    for (int g = 3; g <= 12; ++g) {
        if (g % 2 == 1) {
            specs.push_back(SurfaceSpec(g));
        } else {
            specs.push_back(SurfaceSpec(g, PresentationVariant::cc_dd));
            specs.push_back(SurfaceSpec(g, PresentationVariant::gamma_delta));
        }
    }
    for (const auto& spec : specs) {
        CAPTURE(spec.genus);
        CAPTURE(to_string(spec.variant));
        auto cd = complex_double(spec);
        const int m = 2 * spec.homology_rank();
        REQUIRE(static_cast<int>(cd.basisBc.size()) == m);

        CHECK(cd.symmetry_matrix * cd.symmetry_matrix == IntMat::identity(m));
        CHECK(cd.symmetry_matrix.transpose() * cd.intersection * cd.symmetry_matrix ==
              -cd.intersection);
        CHECK(mod2_torsion_row(cd.projection_matrix * cd.symmetry_matrix, cd.torsion_row) ==
              cd.projection_matrix);

        CHECK(cd.intersection.transpose() == -cd.intersection);
        CHECK(det(cd.intersection) == 1);
        CHECK(cd.intersection == oracle_intersection(cd));

        auto rel_ab = abelianize(cd.double_cover.relators[0], cd.double_cover.generators);
        CHECK(rel_ab == std::vector<Int>(m, 0));
        CHECK(homology_invariants(cd.double_cover) == HomologyInvariants{m, {}});

        // the glued relator certificate is re-checkable from the public data
        Word prod;
        for (size_t j = 0; j < cd.x_words.size(); ++j)
            prod = prod * Word::commutator(cd.x_words[j], cd.y_words[j]);
        CHECK(prod.cyclically_reduced().is_rotation_of(cd.glued_relator.cyclically_reduced()));

        CHECK_NOTHROW(cd.verify());
    }
}

TEST_CASE("lifted relators of the two sheets swap into each other")
{
    for (int g : {3, 4, 5, 6}) {
        auto cd = complex_double(SurfaceSpec(g));
        std::vector<Letter> swapped;
        for (const auto& l : cd.relator_sheet1.letters())
            swapped.push_back(
                Letter{GeneratorSymbol{l.gen.name, l.gen.index, 3 - l.gen.sheet}, l.exp});
        CHECK(Word(swapped) == cd.relator_sheet2);
    }
}

TEST_CASE("equal_mod_relator certificates")
{
    Presentation p;
    p.generators = {gen('x', 1), gen('y', 1), gen('x', 2), gen('y', 2)};
    Word x1 = glet('x', 1), y1 = glet('y', 1), x2 = glet('x', 2), y2 = glet('y', 2);
    Word R = Word::commutator(x1, y1) * Word::commutator(x2, y2);

    CHECK(equal_mod_relator(x1, x1, R));
    CHECK(equal_mod_relator(R * x1, x1, R));
    CHECK(equal_mod_relator(R.inverse() * x1 * R * x1.inverse() * x1, x1, R));
    CHECK_FALSE(equal_mod_relator(x1, y1, R));
}
