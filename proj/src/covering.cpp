#include "kd/covering.hpp"

#include <algorithm>
#include <map>

namespace kd {

namespace {

GeneratorSymbol with_sheet(const GeneratorSymbol& g, int sheet)
{
    return GeneratorSymbol{g.name, g.index, sheet};
}

GeneratorSymbol base_of(const GeneratorSymbol& g)
{
    return GeneratorSymbol{g.name, g.index, 0};
}

GeneratorSymbol xy_gen(char name, int index)
{
    return GeneratorSymbol{std::string(1, name), index, 0};
}

/// Lifts a loop word through the double cover defined by the orientation
/// character: sheet-preserving letters stay on their sheet, sheet-crossing
/// letters alternate it.
Word lift_word(const Word& w, const Presentation& base, const std::vector<int>& character,
               int start_sheet)
{
    std::vector<Letter> out;
    int sheet = start_sheet;
    for (const auto& l : w.letters()) {
        int idx = base.index_of(l.gen);
        if (idx < 0) throw domain_error("cannot lift unknown generator '" + l.gen.str() + "'");
        int cross = character[idx];
        if (l.exp == 1) {
            out.push_back(Letter{with_sheet(l.gen, sheet), 1});
            if (cross) sheet = 3 - sheet;
        } else {
            if (cross) sheet = 3 - sheet;
            out.push_back(Letter{with_sheet(l.gen, sheet), -1});
        }
    }
    if (sheet != start_sheet)
        throw internal_error("lift of a relator does not close up");
    return Word(std::move(out));
}

Int mod2(const Int& v)
{
    Int r = v % 2;
    return r < 0 ? r + 2 : r;
}

// Positions of the canonical homology basis: odd genus (x1..xs, y1..ys),
// even genus (x1, y1, x2..xs, y2..ys).  1-based pair index j.
struct BasisLayout {
    bool odd;
    int s;

    int x_pos(int j) const
    {
        if (odd) return j - 1;
        return j == 1 ? 0 : j;
    }
    int y_pos(int j) const
    {
        if (odd) return s + j - 1;
        return j == 1 ? 1 : s + j - 1;
    }
};

// Exact solve E x = y for a full-column-rank integer matrix; the solution is
// required to exist and be integral.
std::vector<Int> solve_integral(const IntMat& E, const std::vector<Int>& y)
{
    const int m = E.rows(), n = E.cols();
    RatMat a(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = Rat(E(i, j));
        a(i, n) = Rat(y[i]);
    }
    std::vector<int> pivot_col(m, -1);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (a(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row) a.swap_rows(p, row);
        Rat d = a(row, col);
        for (int j = col; j <= n; ++j) a(row, j) /= d;
        for (int i = 0; i < m; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = col; j <= n; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (a(i, n) != 0) throw internal_error("inconsistent homology coordinate system");
    std::vector<Int> x(n, 0);
    for (int i = 0; i < row; ++i) {
        if (!is_integer(a(i, n)))
            throw internal_error("homology coordinates are not integral");
        x[pivot_col[i]] = numerator(a(i, n));
    }
    return x;
}

// Tree-collapse rewriting: a loop at the sheet-1 base point, written in
// surviving lifted letters, becomes a word in the edge generators (every
// surviving non-tree letter).  `vertex_from/to` give each letter's endpoints.
struct TreeRewriter {
    GeneratorSymbol tree;
    std::map<GeneratorSymbol, std::pair<int, int>> ends; // letter -> (from, to)

    std::vector<Letter> rewrite(const Word& w) const
    {
        std::vector<Letter> out;
        int v = 1;
        for (const auto& l : w.letters()) {
            auto it = ends.find(l.gen);
            if (it == ends.end()) throw internal_error("rewrite hit unknown letter " + l.gen.str());
            auto [from, to] = it->second;
            if (l.exp == -1) std::swap(from, to);
            if (from != v)
                throw internal_error("loop is not continuous at letter " + l.gen.str());
            v = to;
            if (l.gen == tree) continue;
            out.push_back(l);
        }
        if (v != 1) throw internal_error("word is not a loop at the base vertex");
        return out;
    }
};

} // namespace

bool equal_mod_relator(const Word& u, const Word& v, const Word& relator, int max_steps)
{
    std::vector<Word> patterns;
    Word r = relator.cyclically_reduced();
    for (int k = 0; k < r.size(); ++k) {
        std::vector<Letter> rot(r.letters().begin() + k, r.letters().end());
        rot.insert(rot.end(), r.letters().begin(), r.letters().begin() + k);
        patterns.push_back(Word(rot));
        patterns.push_back(Word(rot).inverse());
    }

    Word w = u * v.inverse();
    for (int step = 0; step < max_steps; ++step) {
        if (w.empty()) return true;
        bool deleted = false;
        for (const auto& pat : patterns) {
            if (pat.size() > w.size()) continue;
            const auto& ws = w.letters();
            const auto& ps = pat.letters();
            for (size_t at = 0; at + ps.size() <= ws.size(); ++at) {
                if (std::equal(ps.begin(), ps.end(), ws.begin() + at)) {
                    std::vector<Letter> next(ws.begin(), ws.begin() + at);
                    next.insert(next.end(), ws.begin() + at + ps.size(), ws.end());
                    w = Word(std::move(next));
                    deleted = true;
                    break;
                }
            }
            if (deleted) break;
        }
        if (!deleted) return false;
    }
    return false;
}

IntMat intersection_form(const SurfaceSpec& spec)
{
    const int s = spec.homology_rank();
    BasisLayout layout{spec.odd(), s};
    IntMat J(2 * s, 2 * s);
    for (int j = 1; j <= s; ++j) {
        J(layout.x_pos(j), layout.y_pos(j)) = 1;
        J(layout.y_pos(j), layout.x_pos(j)) = -1;
    }
    return J;
}

CoveringData complex_double(const SurfaceSpec& spec)
{
    CoveringData cd;
    cd.spec = spec;
    cd.base = standard_presentation(spec);
    const int n = spec.n();
    const int s = spec.homology_rank();
    const auto character = orientation_character(spec);

    cd.relator_sheet1 = lift_word(cd.base.relators[0], cd.base, character, 1);
    cd.relator_sheet2 = lift_word(cd.base.relators[0], cd.base, character, 2);

    // Glue the two polygons: solve the sheet-2 relator for the last base
    // generator whose sheet-2 copy appears exactly once, substitute into the
    // sheet-1 relator.
    int elim_idx = -1;
    for (size_t i = 0; i < cd.base.generators.size(); ++i) {
        GeneratorSymbol g2 = with_sheet(cd.base.generators[i], 2);
        if (cd.relator_sheet2.count_occurrences(g2) == 1) elim_idx = static_cast<int>(i);
    }
    if (elim_idx < 0) throw internal_error("no generator available for polygon gluing");
    cd.eliminated = with_sheet(cd.base.generators[elim_idx], 2);
    cd.eliminated_solution = solve_relator(cd.relator_sheet2, cd.eliminated);
    cd.glued_relator = substitute(cd.relator_sheet1, cd.eliminated, cd.eliminated_solution);

    // Surviving alphabet, sheet 1 first.
    for (int sheet = 1; sheet <= 2; ++sheet)
        for (const auto& g : cd.base.generators) {
            GeneratorSymbol lg = with_sheet(g, sheet);
            if (lg == cd.eliminated) continue;
            cd.lifted_letters.push_back(lg);
        }

    // The base-point arc between the two sheets: sheet-1 copy of the last
    // orientation-reversing generator.
    int tree_idx = -1;
    for (size_t i = 0; i < character.size(); ++i)
        if (character[i]) tree_idx = static_cast<int>(i);
    cd.tree_edge = with_sheet(cd.base.generators[tree_idx], 1);

    // Standard generators of the cover, realized as lifted-letter words.
    auto lifted = [&](char name, int index, int sheet, int exp = 1) {
        return Word::letter(GeneratorSymbol{std::string(1, name), index, sheet}, exp);
    };
    cd.x_words.assign(s, Word());
    cd.y_words.assign(s, Word());
    if (spec.odd()) {
        Word t = lifted('c', 0, 1);
        for (int j = 1; j <= n; ++j) {
            cd.x_words[j - 1] = lifted('b', n + 1 - j, 2).conjugate(t);
            cd.y_words[j - 1] = lifted('a', n + 1 - j, 2).conjugate(t);
            cd.x_words[n + j - 1] = lifted('a', j, 1);
            cd.y_words[n + j - 1] = lifted('b', j, 1);
        }
    } else if (spec.variant == PresentationVariant::cc_dd) {
        Word d1 = lifted('d', 0, 1);
        cd.x_words[0] = lifted('c', 0, 1) * d1.inverse();
        cd.y_words[0] = d1 * lifted('c', 0, 2);
        for (int j = 1; j <= n; ++j) {
            cd.x_words[j] = lifted('b', n + 1 - j, 2).conjugate(d1);
            cd.y_words[j] = lifted('a', n + 1 - j, 2).conjugate(d1);
            cd.x_words[n + j] = lifted('a', j, 1);
            cd.y_words[n + j] = lifted('b', j, 1);
        }
    } else {
        Word c1 = lifted('c', 0, 1);
        Word d1 = lifted('d', 0, 1);
        cd.x_words[0] = d1;
        cd.y_words[0] = c1 * lifted('c', 0, 2);
        for (int j = 1; j <= n; ++j) {
            cd.x_words[j] = lifted('b', n + 1 - j, 2).conjugate(c1);
            cd.y_words[j] = lifted('a', n + 1 - j, 2).conjugate(c1);
            cd.x_words[n + j] = lifted('a', j, 1).conjugate(d1);
            cd.y_words[n + j] = lifted('b', j, 1).conjugate(d1);
        }
    }

    // Certify the gluing: the commutator product of the standard generators
    // must be the glued relator as a cyclic word.
    Word product;
    for (int j = 0; j < s; ++j) product = product * Word::commutator(cd.x_words[j], cd.y_words[j]);
    if (!product.cyclically_reduced().is_rotation_of(cd.glued_relator.cyclically_reduced()))
        throw internal_error("glued relator is not the expected commutator product");

    // Abstract presentation of the cover.
    for (int j = 1; j <= s; ++j) cd.double_cover.generators.push_back(xy_gen('x', j));
    for (int j = 1; j <= s; ++j) cd.double_cover.generators.push_back(xy_gen('y', j));
    Word abstract_relator;
    for (int j = 1; j <= s; ++j)
        abstract_relator = abstract_relator *
            Word::commutator(Word::letter(xy_gen('x', j)), Word::letter(xy_gen('y', j)));
    cd.double_cover.relators.push_back(abstract_relator);

    BasisLayout layout{spec.odd(), s};
    cd.basisBc.assign(2 * s, GeneratorSymbol{});
    for (int j = 1; j <= s; ++j) {
        cd.basisBc[layout.x_pos(j)] = xy_gen('x', j);
        cd.basisBc[layout.y_pos(j)] = xy_gen('y', j);
    }

    cd.basisB.clear();
    for (size_t i = 0; i < cd.base.generators.size(); ++i)
        if (base_of(cd.eliminated) != cd.base.generators[i]) cd.basisB.push_back(cd.base.generators[i]);

    // Homology coordinates on the cover: columns of E are the abelianized
    // x/y words over the surviving alphabet; loop classes are solved against
    // them.
    const int L = static_cast<int>(cd.lifted_letters.size());
    IntMat E(L, 2 * s);
    auto basis_word = [&](int pos) -> const Word& {
        for (int j = 1; j <= s; ++j) {
            if (layout.x_pos(j) == pos) return cd.x_words[j - 1];
            if (layout.y_pos(j) == pos) return cd.y_words[j - 1];
        }
        throw internal_error("basis position out of range");
    };
    for (int col = 0; col < 2 * s; ++col) {
        auto v = abelianize(basis_word(col), cd.lifted_letters);
        for (int i = 0; i < L; ++i) E(i, col) = v[i];
    }

    // Sheet swap followed by rewriting the glued-away letter.
    auto sigma_hat = [&](const Word& w) {
        std::vector<Letter> swapped;
        swapped.reserve(w.letters().size());
        for (const auto& l : w.letters())
            swapped.push_back(Letter{with_sheet(base_of(l.gen), 3 - l.gen.sheet), l.exp});
        return substitute(Word(std::move(swapped)), cd.eliminated, cd.eliminated_solution);
    };

    cd.symmetry_matrix = IntMat(2 * s, 2 * s);
    for (int col = 0; col < 2 * s; ++col) {
        auto image = solve_integral(E, abelianize(sigma_hat(basis_word(col)), cd.lifted_letters));
        for (int row = 0; row < 2 * s; ++row) cd.symmetry_matrix(row, col) = image[row];
    }

    // Covering projection on homology: drop sheet tags, abelianize over the
    // base generators, then reduce to free-part coordinates plus the Z/2
    // torsion coordinate.
    const int base_gens = static_cast<int>(cd.base.generators.size());
    cd.torsion_row = spec.odd() ? 0 : 1;
    cd.projection_matrix = IntMat(base_gens, 2 * s);
    for (int col = 0; col < 2 * s; ++col) {
        std::vector<Letter> dropped;
        for (const auto& l : basis_word(col).letters())
            dropped.push_back(Letter{base_of(l.gen), l.exp});
        auto raw = abelianize(Word(std::move(dropped)), cd.base.generators);
        std::vector<Int> red = raw;
        if (spec.odd()) {
            red[0] = mod2(raw[0]);
        } else if (spec.variant == PresentationVariant::cc_dd) {
            red[0] = raw[0] - raw[1]; // coefficient of c after d = (c+d) - c
            red[1] = mod2(raw[1]);    // coordinate of the order-2 class c+d
        } else {
            red[1] = mod2(raw[1]);    // d itself is the order-2 class
        }
        for (int row = 0; row < base_gens; ++row) cd.projection_matrix(row, col) = red[row];
    }

    cd.intersection = intersection_form(spec);

    // Symmetry images as words over the cover's own generators, via the
    // collapsed base-point arc.
    TreeRewriter rewriter;
    rewriter.tree = cd.tree_edge;
    for (const auto& lg : cd.lifted_letters) {
        int from = lg.sheet;
        int to = character[cd.base.index_of(base_of(lg))] ? 3 - from : from;
        rewriter.ends[lg] = {from, to};
    }

    // Dictionary from edge generators to x/y words: resolve the plain
    // single-letter rewrites first, then conjugated ones.
    std::map<GeneratorSymbol, Word> dict;
    std::map<GeneratorSymbol, std::vector<Letter>> pending;
    for (int col = 0; col < 2 * s; ++col) {
        auto ew = rewriter.rewrite(basis_word(col));
        Word glet = Word::letter(cd.basisBc[col]);
        if (ew.size() == 1)
            dict[ew[0].gen] = ew[0].exp == 1 ? glet : glet.inverse();
        else
            pending[cd.basisBc[col]] = ew;
    }
    auto expand = [&](const std::vector<Letter>& ew) {
        Word out;
        for (const auto& l : ew) {
            auto it = dict.find(l.gen);
            if (it == dict.end()) return std::optional<Word>();
            out = out * (l.exp == 1 ? it->second : it->second.inverse());
        }
        return std::optional<Word>(out);
    };
    while (!pending.empty()) {
        bool progress = false;
        for (auto it = pending.begin(); it != pending.end();) {
            const auto& ew = it->second;
            const size_t len = ew.size();
            // u e u^-1 with u already resolved
            if (len % 2 == 1) {
                size_t k = len / 2;
                std::vector<Letter> u(ew.begin(), ew.begin() + k);
                bool conj_shape = true;
                for (size_t i = 0; i < k; ++i)
                    if (ew[len - 1 - i].gen != u[i].gen || ew[len - 1 - i].exp != -u[i].exp) {
                        conj_shape = false;
                        break;
                    }
                auto u_word = expand(u);
                if (conj_shape && u_word && !dict.count(ew[k].gen)) {
                    Word glet = Word::letter(it->first);
                    Word middle = u_word->inverse() * glet * (*u_word);
                    dict[ew[k].gen] = ew[k].exp == 1 ? middle : middle.inverse();
                    it = pending.erase(it);
                    progress = true;
                    continue;
                }
            }
            ++it;
        }
        if (!progress) throw internal_error("edge-generator dictionary did not resolve");
    }

    auto to_xy = [&](const Word& loop_at_v1) {
        auto ew = rewriter.rewrite(loop_at_v1);
        auto out = expand(ew);
        if (!out) throw internal_error("loop rewriting hit an unresolved edge generator");
        return *out;
    };

    Word tree_word = Word::letter(cd.tree_edge);
    cd.basepoint_loop = to_xy(tree_word * sigma_hat(tree_word));
    for (int col = 0; col < 2 * s; ++col) {
        Word image = to_xy(tree_word * sigma_hat(basis_word(col)) * tree_word.inverse());
        cd.sigma_words.emplace_back(cd.basisBc[col], image);
    }

    cd.verify();
    return cd;
}

void CoveringData::verify() const
{
    const int s = spec.homology_rank();
    const IntMat id = IntMat::identity(2 * s);

    if (static_cast<int>(double_cover.generators.size()) != 2 * s)
        throw internal_error("cover must have 2(g-1) generators");
    if (double_cover.relators.size() != 1)
        throw internal_error("cover must have a single relator");

    auto hb = homology_invariants(base);
    if (hb.free_rank != s || hb.torsion != std::vector<Int>{2})
        throw internal_error("base homology is not Z^{g-1} + Z/2");
    auto hc = homology_invariants(double_cover);
    if (hc.free_rank != 2 * s || !hc.torsion.empty())
        throw internal_error("cover homology is not free of rank 2(g-1)");

    if (symmetry_matrix * symmetry_matrix != id)
        throw internal_error("symmetry matrix is not an involution");
    if (symmetry_matrix.transpose() * intersection * symmetry_matrix != -intersection)
        throw internal_error("symmetry is not anti-symplectic");
    if (det(intersection) != 1 || intersection.transpose() != -intersection)
        throw internal_error("intersection form is not unimodular skew");

    IntMat ps = projection_matrix * symmetry_matrix;
    for (int j = 0; j < ps.cols(); ++j) ps(torsion_row, j) = ps(torsion_row, j) % 2 == 0 ? 0 : 1;
    IntMat pn = projection_matrix;
    for (int j = 0; j < pn.cols(); ++j)
        if (!(pn(torsion_row, j) == 0 || pn(torsion_row, j) == 1))
            throw internal_error("torsion row is not reduced");
    if (ps != pn) throw internal_error("projection does not absorb the symmetry");

    // The symmetry images written over the cover's generators must abelianize
    // to the same matrix, and applying them twice must be conjugation by the
    // base-point loop modulo the relator.
    const Word& relator = double_cover.relators[0];
    std::map<GeneratorSymbol, Word> sw(sigma_words.begin(), sigma_words.end());
    auto apply_sigma = [&](const Word& w) {
        Word out;
        for (const auto& l : w.letters()) {
            auto it = sw.find(l.gen);
            if (it == sw.end()) throw internal_error("symmetry word table is incomplete");
            out = out * (l.exp == 1 ? it->second : it->second.inverse());
        }
        return out;
    };
    for (int col = 0; col < 2 * s; ++col) {
        const Word& img = sw.at(basisBc[col]);
        auto v = abelianize(img, basisBc);
        for (int row = 0; row < 2 * s; ++row)
            if (v[row] != symmetry_matrix(row, col))
                throw internal_error("symmetry words disagree with the symmetry matrix");

        Word twice = apply_sigma(img);
        Word conj = basepoint_loop * Word::letter(basisBc[col]) * basepoint_loop.inverse();
        if (twice != conj && !equal_mod_relator(twice, conj, relator))
            throw internal_error("symmetry applied twice is not the base-point conjugation");
    }
}

} // namespace kd
