// Acceptance suite: one line per criterion, exact checks with wall-time
// budgets.  Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kd/jacobian.hpp"
#include "kd/json_io.hpp"
#include "kd/torelli.hpp"

using namespace kd;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& failures, bool ok, const std::string& what)
{
    if (!ok) failures.push_back(what);
}

GeneratorSymbol gen(char name, int index = 0)
{
    return GeneratorSymbol{std::string(1, name), index, 0};
}

IntMat random_symmetric(std::mt19937& rng, int n, int magnitude)
{
    std::uniform_int_distribution<int> entry(-magnitude, magnitude);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = entry(rng);
    return m;
}

IntMat random_matrix(std::mt19937& rng, int rows, int cols, int magnitude)
{
    std::uniform_int_distribution<int> entry(-magnitude, magnitude);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

IntMat half_block_form(const IntMat& A)
{
    const int s = A.rows();
    IntMat want(2 * s, 2 * s);
    for (int i = 0; i < s; ++i) {
        want(i, i) = 1;
        want(s + i, s + i) = -1;
        for (int j = 0; j < s; ++j) want(i, s + j) = A(i, j);
    }
    return want;
}

void criterion_g3_anchors(std::vector<std::string>& f)
{
    auto cd = complex_double(SurfaceSpec(3));
    auto ab = adapt_basis(cd.symmetry_matrix, cd.intersection);

    IntMat C{{0, -1, 1, 1}, {-1, 0, 1, 1}, {-1, 0, 1, 0}, {0, -1, 0, 1}};
    expect(f, ab.C == C, "base change C");
    expect(f, det(ab.C) == 1, "det C = 1");
    expect(f, ab.C.transpose() * cd.intersection * ab.C == cd.intersection, "C^t J C = J");

    IntMat sigma_new{{1, 0, -2, -1}, {0, 1, -1, -2}, {0, 0, -1, 0}, {0, 0, 0, -1}};
    expect(f, inverse_unimodular(ab.C) * cd.symmetry_matrix * ab.C == sigma_new,
           "symmetry in the new basis");
    expect(f, ab.A == IntMat{{-2, -1}, {-1, -2}}, "matrix A");
}

void criterion_g4_anchors(std::vector<std::string>& f)
{
    auto cd = complex_double(SurfaceSpec(4));
    auto ab = adapt_basis(cd.symmetry_matrix, cd.intersection);

    expect(f, ab.C.transpose() * cd.intersection * ab.C == standard_symplectic_form(3),
           "C^t J C is the symplectic form");
    expect(f, det(ab.C) == 1, "det C = 1");

    IntMat A{{2, 0, 0}, {0, -2, -1}, {0, -1, -2}};
    expect(f, ab.A == A, "matrix A");
    expect(f, inverse_unimodular(ab.C) * cd.symmetry_matrix * ab.C == half_block_form(A),
           "symmetry in the new basis");
}

void criterion_components(std::vector<std::string>& f)
{
    auto r3 = build_jacobian_report(SurfaceSpec(3));
    expect(f, r3.components.component_count == 1, "one component at genus 3");

    auto r4 = build_jacobian_report(SurfaceSpec(4));
    expect(f, r4.components.component_count == 2, "two components at genus 4");
    bool has_offset = false;
    for (const auto& rep : r4.components.representatives)
        if (rep == std::vector<int>{1, 0, 0}) has_offset = true;
    expect(f, has_offset, "offset representative (1,0,0)");
}

void criterion_isomorphism(std::vector<std::string>& f)
{
    for (int g = 3; g <= 10; ++g) {
        auto report = build_jacobian_report(SurfaceSpec(g));
        expect(f, report.isomorphism.holds, "isomorphism at genus " + std::to_string(g));
        RatMat half = RatMat::identity(g - 1) * Rat(-1, 2);
        expect(f, report.isomorphism.scaling == half,
               "scaling -1/2 I at genus " + std::to_string(g));
    }
}

void criterion_rigidity(std::vector<std::string>& f)
{
    for (int g : {3, 4, 5, 6}) {
        auto cd = complex_double(SurfaceSpec(g));
        const IntMat id = IntMat::identity(2 * (g - 1));

        auto plus = classify_lifts(build_lift_constraints(cd, 1));
        expect(f, plus.solutions == std::vector<IntMat>{id},
               "preserving lift at genus " + std::to_string(g));
        auto minus = classify_lifts(build_lift_constraints(cd, -1));
        expect(f, minus.solutions == std::vector<IntMat>{cd.symmetry_matrix},
               "reversing lift at genus " + std::to_string(g));

        if (g <= 4) {
            for (int eps : {1, -1}) {
                auto sys = build_lift_constraints(cd, eps);
                auto oracle = enumerate_lifts_oracle(sys, 2);
                auto fast = classify_lifts(sys);
                expect(f, oracle.solutions == fast.solutions,
                       "oracle agreement at genus " + std::to_string(g));
            }
        }
    }
}

void criterion_homology(std::vector<std::string>& f)
{
    for (int g = 3; g <= 12; ++g) {
        HomologyInvariants want{g - 1, {Int(2)}};
        if (g % 2 == 1) {
            expect(f, homology_invariants(standard_presentation(SurfaceSpec(g))) == want,
                   "homology at genus " + std::to_string(g));
        } else {
            auto h1 = homology_invariants(
                standard_presentation(SurfaceSpec(g, PresentationVariant::cc_dd)));
            auto h2 = homology_invariants(
                standard_presentation(SurfaceSpec(g, PresentationVariant::gamma_delta)));
            expect(f, h1 == want, "homology at genus " + std::to_string(g));
            expect(f, h1 == h2, "variant agreement at genus " + std::to_string(g));
        }
    }
}

void criterion_properties(std::vector<std::string>& f)
{
    // symmetry properties for every genus and variant
    for (int g = 3; g <= 12; ++g) {
        std::vector<SurfaceSpec> specs{SurfaceSpec(g)};
        if (g % 2 == 0) specs.push_back(SurfaceSpec(g, PresentationVariant::gamma_delta));
        for (const auto& spec : specs) {
            auto cd = complex_double(spec);
            const int m = 2 * (g - 1);
            expect(f, cd.symmetry_matrix * cd.symmetry_matrix == IntMat::identity(m),
                   "involution at genus " + std::to_string(g));
            expect(f,
                   cd.symmetry_matrix.transpose() * cd.intersection * cd.symmetry_matrix ==
                       -cd.intersection,
                   "anti-symplectic at genus " + std::to_string(g));
            IntMat ps = cd.projection_matrix * cd.symmetry_matrix;
            for (int j = 0; j < ps.cols(); ++j) {
                Int v = ps(cd.torsion_row, j) % 2;
                ps(cd.torsion_row, j) = v < 0 ? v + 2 : v;
            }
            expect(f, ps == cd.projection_matrix,
                   "projection absorbs symmetry at genus " + std::to_string(g));
        }
    }

    // component counts are blind to Y and to A + 2S
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 120; ++trial) {
        int s = 1 + static_cast<int>(rng() % 5);
        IntMat A = random_symmetric(rng, s, 6);
        IntMat S = random_symmetric(rng, s, 4);
        auto a = real_part_components(A);
        auto b = real_part_components(A + S * Int(2));
        expect(f, a.component_count == b.component_count, "count invariance under A+2S");
        expect(f, a.representatives == b.representatives, "representative invariance");
    }

    // normal-form self-checks
    for (int trial = 0; trial < 1100; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 5);
        IntMat m = random_matrix(rng, rows, cols, 9);
        auto snf = smith_normal_form(m);
        bool ok = snf.U * m * snf.V == snf.D;
        Int du = det(snf.U), dv = det(snf.V);
        ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
        Int prev = 0;
        for (int i = 0; i < std::min(rows, cols); ++i) {
            const Int& d = snf.D(i, i);
            ok = ok && d >= 0;
            if (prev != 0 && d != 0) ok = ok && d % prev == 0;
            prev = d;
        }
        auto hnf = hermite_normal_form(m);
        Int dhv = det(hnf.V);
        ok = ok && m * hnf.V == hnf.D && (dhv == 1 || dhv == -1);
        expect(f, ok, "normal form self-check, trial " + std::to_string(trial));
        if (!ok) break;
    }

    // word-calculus laws
    std::vector<GeneratorSymbol> gens{gen('a'), gen('b'), gen('c'), gen('d', 2)};
    std::uniform_int_distribution<int> len(0, 24);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    auto rand_word = [&]() {
        std::vector<Letter> seq;
        int L = len(rng);
        for (int i = 0; i < L; ++i) seq.push_back(Letter{gens[pick(rng)], sign(rng) ? 1 : -1});
        return Word(seq);
    };
    for (int trial = 0; trial < 1100; ++trial) {
        Word u = rand_word(), v = rand_word();
        bool ok = (u * u.inverse()).empty();
        ok = ok && Word(u.letters()) == u;
        auto au = abelianize(u, gens), av = abelianize(v, gens), auv = abelianize(u * v, gens);
        for (size_t i = 0; i < gens.size(); ++i) ok = ok && auv[i] == au[i] + av[i];
        auto ac = abelianize(Word::commutator(u, v), gens);
        for (size_t i = 0; i < gens.size(); ++i) ok = ok && ac[i] == 0;
        expect(f, ok, "word law, trial " + std::to_string(trial));
        if (!ok) break;
    }
}

} // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "genus 3 anchor matrices (C, sigma in new basis, A)", 1.0, criterion_g3_anchors},
        {2, "genus 4 anchor matrices (C symplectic, sigma in new basis, A)", 1.0,
         criterion_g4_anchors},
        {3, "real locus component counts and offset representative", 1.0, criterion_components},
        {4, "component isomorphism with scaling -1/2 for genus 3..10", 10.0,
         criterion_isomorphism},
        {5, "lift rigidity for genus 3..6 with oracle agreement", 60.0, criterion_rigidity},
        {6, "homology invariants (g-1, [2]) for genus 3..12, both variants", 1.0,
         criterion_homology},
        {7, "property suites (symmetry, components, normal forms, words)", 300.0,
         criterion_properties},
    };

    int failures = 0;
    double total = 0.0;
    for (const auto& c : criteria) {
        std::vector<std::string> problems;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(problems);
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += elapsed;
        if (elapsed > c.budget_seconds)
            problems.push_back("time budget exceeded (" + std::to_string(elapsed) + "s > " +
                               std::to_string(c.budget_seconds) + "s)");
        if (problems.empty()) {
            std::printf("criterion %d: PASS (%.2fs) %s\n", c.number, elapsed, c.title.c_str());
        } else {
            ++failures;
            std::printf("criterion %d: FAIL (%.2fs) %s\n", c.number, elapsed, c.title.c_str());
            for (const auto& p : problems) std::printf("    - %s\n", p.c_str());
        }
    }
    std::printf("%d of %zu criteria passed (%.2fs total)\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    return failures == 0 ? 0 : 1;
}
