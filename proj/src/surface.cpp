#include "kd/surface.hpp"

namespace kd {

std::string to_string(PresentationVariant v)
{
    return v == PresentationVariant::cc_dd ? "cc-dd" : "gamma-delta";
}

PresentationVariant parse_variant(const std::string& text)
{
    if (text == "cc-dd") return PresentationVariant::cc_dd;
    if (text == "gamma-delta") return PresentationVariant::gamma_delta;
    throw parse_error("unknown presentation variant '" + text + "'");
}

SurfaceSpec::SurfaceSpec(int g, PresentationVariant v) : genus(g), variant(v)
{
    if (g < 3) throw domain_error("genus must be at least 3");
}

namespace {

GeneratorSymbol gen(char name, int index = 0, int sheet = 0)
{
    return GeneratorSymbol{std::string(1, name), index, sheet};
}

} // namespace

Presentation standard_presentation(const SurfaceSpec& spec)
{
    if (spec.genus < 3) throw domain_error("genus must be at least 3");
    const int n = spec.n();

    Presentation p;
    p.generators.push_back(gen('c'));
    if (!spec.odd()) p.generators.push_back(gen('d'));
    for (int j = 1; j <= n; ++j) p.generators.push_back(gen('a', j));
    for (int j = 1; j <= n; ++j) p.generators.push_back(gen('b', j));

    Word c = Word::letter(gen('c'));
    Word head;
    if (spec.odd()) {
        head = c * c;
    } else if (spec.variant == PresentationVariant::cc_dd) {
        Word d = Word::letter(gen('d'));
        head = c * c * d * d;
    } else {
        Word d = Word::letter(gen('d'));
        head = c * d * c.inverse() * d;
    }
    Word relator = head;
    for (int j = 1; j <= n; ++j)
        relator = relator * Word::commutator(Word::letter(gen('a', j)), Word::letter(gen('b', j)));
    p.relators.push_back(relator);
    return p;
}

std::vector<int> orientation_character(const SurfaceSpec& spec)
{
    Presentation p = standard_presentation(spec);
    std::vector<int> w(p.generators.size(), 0);
    w[0] = 1; // c
    if (!spec.odd() && spec.variant == PresentationVariant::cc_dd) w[1] = 1; // d
    return w;
}

HomologyInvariants homology_invariants(const Presentation& p)
{
    const int gens = static_cast<int>(p.generators.size());
    const int rels = static_cast<int>(p.relators.size());

    HomologyInvariants h;
    if (rels == 0) {
        h.free_rank = gens;
        return h;
    }

    IntMat relmat(rels, gens);
    for (int i = 0; i < rels; ++i) {
        auto v = abelianize(p.relators[i], p.generators);
        for (int j = 0; j < gens; ++j) relmat(i, j) = v[j];
    }

    auto snf = smith_normal_form(relmat);
    int nonzero = 0;
    for (int i = 0; i < std::min(rels, gens); ++i) {
        const Int& d = snf.D(i, i);
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) h.torsion.push_back(d);
    }
    h.free_rank = gens - nonzero;
    return h;
}

} // namespace kd
