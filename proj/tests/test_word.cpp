#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

using namespace kd;
using namespace kdtest;

namespace {

Presentation odd_context()
{
    Presentation p;
    p.generators = {gen('c'), gen('a', 1), gen('b', 1)};
    return p;
}

// Sheet-tagged alphabet for two-sheet words, n pairs per sheet plus c, d.
Presentation lifted_context(int n)
{
    Presentation p;
    for (int sheet = 1; sheet <= 2; ++sheet) {
        p.generators.push_back(gen('c', 0, sheet));
        p.generators.push_back(gen('d', 0, sheet));
        for (int j = 1; j <= n; ++j) {
            p.generators.push_back(gen('a', j, sheet));
            p.generators.push_back(gen('b', j, sheet));
        }
    }
    return p;
}

} // namespace

TEST_CASE("parse_word expands exponents and commutator sugar")
{
    auto ctx = odd_context();
    Word w = parse_word("c^2 [a1,b1]", ctx);
    REQUIRE(w.size() == 6);
    Word expected = glet('c') * glet('c') * Word::commutator(glet('a', 1), glet('b', 1));
    CHECK(w == expected);
}

TEST_CASE("parse_word cancels freely and accepts the empty word")
{
    auto ctx = odd_context();
    CHECK(parse_word("a1 a1^-1 b1", ctx) == glet('b', 1));
    CHECK(parse_word("", ctx).empty());
    CHECK(parse_word("   ", ctx).empty());
}

TEST_CASE("parse_word grammar extensions: group inverse and nested brackets")
{
    auto ctx = odd_context();
    CHECK(parse_word("(c a1)^-1", ctx) == (glet('c') * glet('a', 1)).inverse());
    CHECK(parse_word("[c,[a1,b1]]", ctx) ==
          Word::commutator(glet('c'), Word::commutator(glet('a', 1), glet('b', 1))));
    CHECK(parse_word("[a1,b1]^-1", ctx) == Word::commutator(glet('b', 1), glet('a', 1)));
}

TEST_CASE("parse_word rejects malformed input")
{
    auto ctx = odd_context();
    CHECK_THROWS_AS(parse_word("q", ctx), parse_error);           // unknown generator
    CHECK_THROWS_AS(parse_word("a2", ctx), parse_error);          // unknown index
    CHECK_THROWS_AS(parse_word("c^", ctx), parse_error);          // missing exponent
    CHECK_THROWS_AS(parse_word("c^0", ctx), parse_error);         // zero exponent
    CHECK_THROWS_AS(parse_word("[a1,b1", ctx), parse_error);      // unbalanced bracket
    CHECK_THROWS_AS(parse_word("(a1 b1", ctx), parse_error);      // unbalanced paren
    CHECK_THROWS_AS(parse_word("a1,b1]", ctx), parse_error);      // stray comma
    CHECK_THROWS_AS(parse_word("A1", ctx), parse_error);          // bad identifier
}

TEST_CASE("reduction removes inverse pairs eagerly")
{
    auto a = gen('a'), b = gen('b'), c = gen('c');
    // a b b^-1 a^-1 -> empty
    CHECK(Word({{a, 1}, {b, 1}, {b, -1}, {a, -1}}).empty());
    // a b a^-1 is already reduced
    Word w({{a, 1}, {b, 1}, {a, -1}});
    CHECK(w.size() == 3);
    // c c a b a^-1 a a^-1 b^-1 -> c c a b a^-1 b^-1
    Word v({{c, 1}, {c, 1}, {a, 1}, {b, 1}, {a, -1}, {a, 1}, {a, -1}, {b, -1}});
    CHECK(v == Word({{c, 1}, {c, 1}, {a, 1}, {b, 1}, {a, -1}, {b, -1}}));
}

TEST_CASE("reduction laws over random words")
{
    std::mt19937 rng(20240817);
    std::vector<GeneratorSymbol> gens = {gen('a'), gen('b'), gen('c'), gen('d', 1)};
    for (int trial = 0; trial < 1200; ++trial) {
        auto seq = random_letter_seq(rng, gens, 30);
        Word w(seq);
        CHECK(w.size() <= static_cast<int>(seq.size()));
        // no adjacent inverse pair survives
        for (int i = 0; i + 1 < w.size(); ++i) {
            bool cancelling = w.letters()[i].gen == w.letters()[i + 1].gen &&
                              w.letters()[i].exp == -w.letters()[i + 1].exp;
            CHECK_FALSE(cancelling);
        }
        CHECK((w * w.inverse()).empty());
        CHECK((w.inverse() * w).empty());
        // idempotence: rebuilding from the reduced letters changes nothing
        CHECK(Word(w.letters()) == w);
    }
}

TEST_CASE("solve_relator inverts single occurrences")
{
    auto ctx = lifted_context(1);
    Word c1 = glet('c', 0, 1), c2 = glet('c', 0, 2);
    Word d1 = glet('d', 0, 1), d2 = glet('d', 0, 2);
    Word comm2 = Word::commutator(glet('a', 1, 2), glet('b', 1, 2));

    SUBCASE("sheet-2 relator solved for the second crossing letter")
    {
        Word r = c2 * c1 * comm2;
        Word expected = Word::commutator(glet('b', 1, 2), glet('a', 1, 2)) * c1.inverse();
        CHECK(solve_relator(r, gen('c', 0, 2)) == expected);
    }
    SUBCASE("four-letter head")
    {
        Word r = c2 * c1 * d2 * d1 * comm2;
        Word expected = c1.inverse() * c2.inverse() *
                        Word::commutator(glet('b', 1, 2), glet('a', 1, 2)) * d1.inverse();
        CHECK(solve_relator(r, gen('d', 0, 2)) == expected);
    }
    SUBCASE("single letter relator")
    {
        CHECK(solve_relator(glet('c', 0, 2), gen('c', 0, 2)).empty());
        CHECK(solve_relator(glet('c', 0, 2, -1), gen('c', 0, 2)).empty());
    }
    SUBCASE("errors")
    {
        Word r = c1 * d1;
        CHECK_THROWS_AS(solve_relator(r, gen('c', 0, 2)), domain_error); // absent
        Word twice = c2 * d1 * c2;
        CHECK_THROWS_AS(solve_relator(twice, gen('c', 0, 2)), domain_error); // double
    }
}

TEST_CASE("substitute rewrites every occurrence and reduces")
{
    auto ctx = lifted_context(1);
    Word c1 = glet('c', 0, 1), c2 = glet('c', 0, 2);
    Word comm1 = Word::commutator(glet('a', 1, 1), glet('b', 1, 1));
    Word repl = Word::commutator(glet('b', 1, 2), glet('a', 1, 2)) * c1.inverse();

    Word w = c1 * c2 * comm1;
    Word got = substitute(w, gen('c', 0, 2), repl);
    Word expected = c1 * Word::commutator(glet('b', 1, 2), glet('a', 1, 2)) * c1.inverse() * comm1;
    CHECK(got == expected);

    CHECK(substitute(c2, gen('c', 0, 2), repl) == repl);
    CHECK(substitute(comm1, gen('c', 0, 2), repl) == comm1);
    CHECK_THROWS_AS(substitute(w, gen('c', 0, 1), c1 * c1), domain_error);
}

TEST_CASE("substituting the solved word kills the relator")
{
    std::mt19937 rng(7);
    std::vector<GeneratorSymbol> gens = {gen('a'), gen('b'), gen('c')};
    GeneratorSymbol x = gen('x');
    int done = 0;
    while (done < 300) {
        Word u = random_word(rng, gens, 8);
        Word v = random_word(rng, gens, 8);
        int exp = (rng() & 1) ? 1 : -1;
        Word r = u * Word::letter(x, exp) * v;
        if (r.count_occurrences(x) != 1) continue;
        Word sol = solve_relator(r, x);
        CHECK_FALSE(sol.contains(x));
        CHECK(substitute(r, x, sol).empty());
        ++done;
    }
}

TEST_CASE("abelianize counts exponents")
{
    auto c = gen('c'), d = gen('d'), a = gen('a', 1), b = gen('b', 1);
    Word comm = Word::commutator(Word::letter(a), Word::letter(b));

    auto v = abelianize(Word::letter(c).pow(2) * comm, {c, a, b});
    CHECK(v == std::vector<Int>{2, 0, 0});

    auto v2 = abelianize(Word::letter(c).pow(2) * Word::letter(d).pow(2) * comm, {c, d, a, b});
    CHECK(v2 == std::vector<Int>{2, 2, 0, 0});

    auto v3 = abelianize(Word::letter(b).conjugate(Word::letter(c)), {c, a, b});
    CHECK(v3 == std::vector<Int>{0, 0, 1});

    CHECK_THROWS_AS(abelianize(Word::letter(d), {c, a, b}), domain_error);
}

TEST_CASE("abelianize is a homomorphism killing commutators")
{
    std::mt19937 rng(99);
    std::vector<GeneratorSymbol> gens = {gen('a'), gen('b'), gen('c'), gen('e', 2)};
    auto add = [](std::vector<Int> x, const std::vector<Int>& y) {
        for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return x;
    };
    for (int trial = 0; trial < 1000; ++trial) {
        Word u = random_word(rng, gens, 12);
        Word v = random_word(rng, gens, 12);
        auto au = abelianize(u, gens), av = abelianize(v, gens);
        CHECK(abelianize(u * v, gens) == add(au, av));
        CHECK(abelianize(Word::commutator(u, v), gens) == std::vector<Int>(gens.size(), 0));
        // free reduction is invisible to the exponent sums
        auto seq = random_letter_seq(rng, gens, 20);
        std::vector<Int> raw(gens.size(), 0);
        for (const auto& l : seq)
            for (size_t k = 0; k < gens.size(); ++k)
                if (gens[k] == l.gen) raw[k] += l.exp;
        CHECK(abelianize(Word(seq), gens) == raw);
    }
}

TEST_CASE("generator symbols parse and print round-trip")
{
    for (const char* name : {"a", "b12", "c_1", "a3_2", "z9_1"}) {
        auto g = GeneratorSymbol::parse(name);
        CHECK(g.str() == name);
    }
    CHECK_THROWS_AS(GeneratorSymbol::parse(""), parse_error);
    CHECK_THROWS_AS(GeneratorSymbol::parse("3a"), parse_error);
    CHECK_THROWS_AS(GeneratorSymbol::parse("a_3"), parse_error);
    CHECK_THROWS_AS(GeneratorSymbol::parse("a_"), parse_error);
    CHECK_THROWS_AS(GeneratorSymbol::parse("a0"), parse_error);
    CHECK_THROWS_AS(GeneratorSymbol::parse("a01"), parse_error);
}
