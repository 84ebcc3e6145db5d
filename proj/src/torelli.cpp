#include "kd/torelli.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <thread>

namespace kd {

namespace {

Int mod2(const Int& v)
{
    Int r = v % 2;
    return r < 0 ? r + 2 : r;
}

// ---------------------------------------------------------------------------
// Quadratic polynomials over the elimination parameters.

struct Poly {
    Rat c;
    std::map<int, Rat> lin;
    std::map<std::pair<int, int>, Rat> quad; // keys with first <= second

    bool zero() const { return c == 0 && lin.empty() && quad.empty(); }
    int degree() const { return !quad.empty() ? 2 : (!lin.empty() ? 1 : 0); }

    void add_const(const Rat& v) { c += v; }

    void add_lin(int k, const Rat& v)
    {
        auto it = lin.emplace(k, Rat(0)).first;
        it->second += v;
        if (it->second == 0) lin.erase(it);
    }

    void add_quad(int i, int j, const Rat& v)
    {
        if (i > j) std::swap(i, j);
        auto it = quad.emplace(std::make_pair(i, j), Rat(0)).first;
        it->second += v;
        if (it->second == 0) quad.erase(it);
    }

    Poly& operator+=(const Poly& o)
    {
        c += o.c;
        for (const auto& [k, v] : o.lin) add_lin(k, v);
        for (const auto& [k, v] : o.quad) add_quad(k.first, k.second, v);
        return *this;
    }

    Poly scaled(const Rat& f) const
    {
        Poly r;
        if (f == 0) return r;
        r.c = c * f;
        for (const auto& [k, v] : lin) r.lin[k] = v * f;
        for (const auto& [k, v] : quad) r.quad[k] = v * f;
        return r;
    }

    // product of two affine polynomials
    static Poly product(const Poly& a, const Poly& b)
    {
        Poly r;
        r.c = a.c * b.c;
        for (const auto& [k, v] : b.lin) r.add_lin(k, a.c * v);
        for (const auto& [k, v] : a.lin) r.add_lin(k, v * b.c);
        for (const auto& [i, u] : a.lin)
            for (const auto& [j, v] : b.lin) r.add_quad(i, j, u * v);
        return r;
    }

    // substitute every variable by an affine polynomial
    Poly substituted(const std::vector<Poly>& map) const
    {
        Poly r;
        r.c = c;
        for (const auto& [k, v] : lin) r += map[k].scaled(v);
        for (const auto& [k, v] : quad) r += product(map[k.first], map[k.second]).scaled(v);
        return r;
    }

    std::string str(const std::vector<std::string>& names) const
    {
        std::string out;
        auto term = [&](const Rat& v, const std::string& mono) {
            if (v == 0) return;
            std::string coeff = kd::to_string(v < 0 ? Rat(-v) : v);
            if (out.empty())
                out += v < 0 ? "-" : "";
            else
                out += v < 0 ? " - " : " + ";
            if (mono.empty()) {
                out += coeff;
            } else {
                if (coeff != "1") out += coeff + "*";
                out += mono;
            }
        };
        for (const auto& [k, v] : quad)
            term(v, k.first == k.second ? names[k.first] + "^2"
                                        : names[k.first] + "*" + names[k.second]);
        for (const auto& [k, v] : lin) term(v, names[k]);
        term(c, "");
        return out.empty() ? "0" : out;
    }
};

// ---------------------------------------------------------------------------

struct AffineF {
    int size = 0;
    int dim = 0;                     // number of parameters
    std::vector<Poly> entries;       // row-major, affine
    std::vector<std::string> names;  // parameter display names

    const Poly& at(int i, int j) const { return entries[i * size + j]; }
};

// Residual F^t J F - eps J as polynomials; only the strict upper triangle is
// meaningful (the form is skew for every F).
std::vector<std::pair<std::pair<int, int>, Poly>> residual(const AffineF& F, const IntMat& J,
                                                           int eps)
{
    const int n = F.size;
    std::vector<std::pair<int, int>> jnz;
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            if (J(m, k) != 0) jnz.emplace_back(m, k);

    std::vector<std::pair<std::pair<int, int>, Poly>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Poly p;
            for (auto [m, k] : jnz)
                p += Poly::product(F.at(m, i), F.at(k, j)).scaled(Rat(J(m, k)));
            p.add_const(Rat(-eps * J(i, j)));
            if (!p.zero()) out.push_back({{i, j}, p});
        }
    return out;
}

std::optional<IntMat> constant_integral_matrix(const AffineF& F)
{
    IntMat m(F.size, F.size);
    for (int i = 0; i < F.size; ++i)
        for (int j = 0; j < F.size; ++j) {
            const Poly& p = F.at(i, j);
            if (!p.lin.empty() || !p.quad.empty())
                throw internal_error("matrix is not constant yet");
            if (!is_integer(p.c)) return std::nullopt;
            m(i, j) = numerator(p.c);
        }
    return m;
}

void sort_and_dedup(std::vector<IntMat>& sols)
{
    auto key = [](const IntMat& m) {
        std::vector<Int> v;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
        return v;
    };
    std::sort(sols.begin(), sols.end(),
              [&](const IntMat& a, const IntMat& b) { return key(a) < key(b); });
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
}

} // namespace

// ---------------------------------------------------------------------------

IntMat LiftConstraintSystem::expected_solution() const
{
    return orientation == 1 ? IntMat::identity(size) : symmetry;
}

bool LiftConstraintSystem::satisfied_by(const IntMat& F) const
{
    if (F.rows() != size || F.cols() != size) return false;
    if (F * symmetry != symmetry * F) return false;
    IntMat pf = projection * F;
    for (int j = 0; j < size; ++j) pf(torsion_row, j) = mod2(pf(torsion_row, j));
    if (pf != projection) return false;
    return F.transpose() * intersection * F == intersection * Int(orientation);
}

void LiftConstraintSystem::assemble_linear_system()
{
    const int n = size;
    const int base_rows = projection.rows();
    const int rows = base_rows * n + n * n;
    lin_lhs = IntMat(rows, unknowns());
    lin_rhs.assign(rows, 0);

    int r = 0;
    // P F = P; the torsion row carries a parity slack: sum - 2 k_j = P(t, j).
    for (int i = 0; i < base_rows; ++i)
        for (int j = 0; j < n; ++j, ++r) {
            for (int m = 0; m < n; ++m)
                if (projection(i, m) != 0) lin_lhs(r, f_index(m, j)) = projection(i, m);
            if (i == torsion_row) lin_lhs(r, n * n + j) = -2;
            lin_rhs[r] = projection(i, j);
        }
    // F S - S F = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++r) {
            for (int m = 0; m < n; ++m) {
                if (symmetry(m, j) != 0) lin_lhs(r, f_index(i, m)) += symmetry(m, j);
                if (symmetry(i, m) != 0) lin_lhs(r, f_index(m, j)) -= symmetry(i, m);
            }
        }
}

LiftConstraintSystem build_lift_constraints(const CoveringData& cover, int orientation)
{
    if (orientation != 1 && orientation != -1)
        throw domain_error("orientation must be +1 or -1");

    LiftConstraintSystem sys;
    sys.spec = cover.spec;
    sys.orientation = orientation;
    sys.size = 2 * cover.spec.homology_rank();
    sys.projection = cover.projection_matrix;
    sys.torsion_row = cover.torsion_row;
    sys.symmetry = cover.symmetry_matrix;
    sys.intersection = cover.intersection;
    sys.assemble_linear_system();
    return sys;
}

LiftConstraintSystem build_lift_constraints(const SurfaceSpec& spec, int orientation)
{
    return build_lift_constraints(complex_double(spec), orientation);
}

std::string to_string(LiftMethod m)
{
    return m == LiftMethod::staged_elimination ? "staged-elimination" : "bounded-enumeration";
}

namespace {

// Candidate vector (vec F | slacks) for the distinguished solution; valid
// whenever it satisfies the assembled linear system.
std::optional<std::vector<Int>> candidate_vector(const LiftConstraintSystem& sys)
{
    IntMat F = sys.expected_solution();
    const int n = sys.size;
    std::vector<Int> v(sys.unknowns(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[sys.f_index(i, j)] = F(i, j);
    IntMat pf = sys.projection * F;
    for (int j = 0; j < n; ++j) {
        Int diff = pf(sys.torsion_row, j) - sys.projection(sys.torsion_row, j);
        if (diff % 2 != 0) return std::nullopt;
        v[n * n + j] = diff / 2;
    }
    for (int r = 0; r < sys.lin_lhs.rows(); ++r) {
        Int acc = 0;
        for (int c = 0; c < sys.lin_lhs.cols(); ++c)
            if (sys.lin_lhs(r, c) != 0) acc += sys.lin_lhs(r, c) * v[c];
        if (acc != sys.lin_rhs[r]) return std::nullopt;
    }
    return v;
}

} // namespace

LiftClassification classify_lifts(const LiftConstraintSystem& system, bool want_trace,
                                  int fallback_bound, Int enum_limit)
{
    const int n = system.size;

    // Stage 1: exact rational solution of the linear constraint families.
    RatMat A = to_rat(system.lin_lhs);
    RatMat b(system.lin_lhs.rows(), 1);
    for (int i = 0; i < b.rows(); ++i) b(i, 0) = Rat(system.lin_rhs[i]);
    auto aff = solve_rational(A, b);

    LiftClassification out;
    if (!aff.consistent) return out;

    if (auto cand = candidate_vector(system)) {
        for (int i = 0; i < aff.particular.rows(); ++i) aff.particular(i, 0) = Rat((*cand)[i]);
    }

    AffineF F;
    F.size = n;
    F.dim = aff.nullspace.cols();
    F.entries.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly p;
            int idx = system.f_index(i, j);
            p.c = aff.particular(idx, 0);
            for (int k = 0; k < F.dim; ++k)
                if (aff.nullspace(idx, k) != 0) p.add_lin(k, aff.nullspace(idx, k));
            F.entries[i * n + j] = p;
        }
    for (int k = 0; k < F.dim; ++k) F.names.push_back("t" + std::to_string(k));

    if (want_trace) {
        out.trace.push_back("parametrized: " + std::to_string(F.dim) +
                            " free parameters after the linear constraints");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (F.at(i, j).degree() > 0)
                    out.trace.push_back("param: F[" + std::to_string(i) + "][" + std::to_string(j) +
                                        "] = " + F.at(i, j).str(F.names));
    }

    // Stages 2-3: expand the symplectic residual and repeatedly solve the
    // linear polynomials it contains.
    while (true) {
        auto res = residual(F, system.intersection, system.orientation);
        if (res.empty()) break;

        bool any_linear = false;
        for (const auto& [label, p] : res) {
            if (p.degree() == 0) return out; // nonzero constant: no solutions
            if (p.degree() == 1) any_linear = true;
        }
        if (!any_linear) {
            out = enumerate_lifts_oracle(system, fallback_bound, enum_limit);
            out.trace.insert(out.trace.begin(),
                             "fallback: nonlinear residual survived elimination; "
                             "bounded enumeration used");
            return out;
        }

        // One pass: eliminate sequentially in (degree, position) order.
        std::vector<std::optional<Poly>> assign(F.dim);
        int eliminated = 0;
        for (const auto& [label, p0] : res) {
            if (p0.degree() != 1) continue;
            Poly p;
            p.c = p0.c;
            for (const auto& [k, v] : p0.lin) {
                if (assign[k])
                    p += assign[k]->scaled(v);
                else
                    p.add_lin(k, v);
            }
            if (p.zero()) continue;
            if (p.lin.empty()) return out; // contradiction
            int var = p.lin.begin()->first;
            Rat coeff = p.lin.begin()->second;
            Poly expr;
            expr.c = -p.c / coeff;
            for (auto it = std::next(p.lin.begin()); it != p.lin.end(); ++it)
                expr.add_lin(it->first, -it->second / coeff);
            if (want_trace)
                out.trace.push_back("derived: residual[" + std::to_string(label.first) + "][" +
                                    std::to_string(label.second) + "]: " + p.str(F.names) +
                                    " = 0 => " + F.names[var] + " = " + expr.str(F.names));
            // keep assigned expressions free of assigned variables
            std::vector<Poly> self(F.dim);
            for (int k = 0; k < F.dim; ++k) {
                Poly id;
                if (k == var)
                    id = expr;
                else
                    id.add_lin(k, Rat(1));
                self[k] = id;
            }
            for (auto& a : assign)
                if (a) a = a->substituted(self);
            assign[var] = expr;
            ++eliminated;
        }
        if (eliminated == 0) throw internal_error("linear residual pass made no progress");

        // Renumber the surviving parameters and substitute into F.
        std::vector<int> new_index(F.dim, -1);
        std::vector<std::string> new_names;
        for (int k = 0; k < F.dim; ++k)
            if (!assign[k]) {
                new_index[k] = static_cast<int>(new_names.size());
                new_names.push_back(F.names[k]);
            }
        std::vector<Poly> map(F.dim);
        for (int k = 0; k < F.dim; ++k) {
            Poly p;
            if (assign[k]) {
                p.c = assign[k]->c;
                for (const auto& [v, coef] : assign[k]->lin) {
                    if (new_index[v] < 0) throw internal_error("assignment references solved variable");
                    p.add_lin(new_index[v], coef);
                }
            } else {
                p.add_lin(new_index[k], Rat(1));
            }
            map[k] = p;
        }
        for (auto& e : F.entries) e = e.substituted(map);
        F.dim = static_cast<int>(new_names.size());
        F.names = new_names;
    }

    if (F.dim > 0)
        throw internal_error("lift solution set is not finite");

    auto m = constant_integral_matrix(F);
    if (m) {
        if (!system.satisfied_by(*m))
            throw internal_error("staged elimination produced an invalid lift");
        out.solutions.push_back(*m);
        if (want_trace) out.trace.push_back("solution: unique integral matrix found");
    } else if (want_trace) {
        out.trace.push_back("solution: unique rational solution is not integral; empty set");
    }
    out.method = LiftMethod::staged_elimination;
    return out;
}

// ---------------------------------------------------------------------------
// Bounded enumeration oracle.

namespace {

// Integer affine parametrization F(t) = F0 + sum_k t_k B_k restricted to the
// F block of the unknown vector.
struct IntAffineF {
    int size = 0;
    int dim = 0;
    std::vector<Int> base;              // size*size
    std::vector<std::vector<Int>> coef; // size*size x dim
};

template <class S>
struct FastPoly {
    S c;
    std::vector<std::pair<int, S>> lin;
    std::vector<std::pair<std::pair<int, int>, S>> quad;

    size_t terms() const { return lin.size() + quad.size(); }

    S eval(const std::vector<S>& t) const
    {
        S acc = c;
        for (const auto& [k, v] : lin) acc += v * t[k];
        for (const auto& [k, v] : quad) acc += v * t[k.first] * t[k.second];
        return acc;
    }
};

// Residual polynomials with exact coefficients, sparsest first.
std::vector<FastPoly<Int>> residual_polys(const IntAffineF& F, const IntMat& J, int eps)
{
    const int n = F.size;
    auto entry_base = [&](int i, int j) { return F.base[i * n + j]; };
    auto entry_coef = [&](int i, int j, int k) { return F.coef[i * n + j][k]; };

    std::vector<FastPoly<Int>> polys;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int c = -Int(eps) * J(i, j);
            std::map<int, Int> lin;
            std::map<std::pair<int, int>, Int> quad;
            for (int m = 0; m < n; ++m)
                for (int k = 0; k < n; ++k) {
                    if (J(m, k) == 0) continue;
                    const Int w = J(m, k);
                    const Int a0 = entry_base(m, i), b0 = entry_base(k, j);
                    c += w * a0 * b0;
                    for (int u = 0; u < F.dim; ++u) {
                        const Int au = entry_coef(m, i, u);
                        const Int bu = entry_coef(k, j, u);
                        if (bu != 0 && a0 != 0) lin[u] += w * a0 * bu;
                        if (au != 0 && b0 != 0) lin[u] += w * au * b0;
                        if (au == 0) continue;
                        for (int v = 0; v < F.dim; ++v) {
                            const Int bv = entry_coef(k, j, v);
                            if (bv == 0) continue;
                            auto key = std::minmax(u, v);
                            quad[{key.first, key.second}] += w * au * bv;
                        }
                    }
                }
            FastPoly<Int> p;
            p.c = c;
            for (const auto& [k, v] : lin)
                if (v != 0) p.lin.push_back({k, v});
            for (const auto& [k, v] : quad)
                if (v != 0) p.quad.push_back({k, v});
            if (p.terms() > 0 || p.c != 0) polys.push_back(std::move(p));
        }
    std::sort(polys.begin(), polys.end(),
              [](const auto& a, const auto& b) { return a.terms() < b.terms(); });
    return polys;
}

// Upper bound on every partial sum that can appear while evaluating the
// residual polynomials or reconstructing F over the box.
Int enumeration_value_bound(const std::vector<FastPoly<Int>>& polys, const IntAffineF& F,
                            int bound)
{
    auto mag = [](const Int& v) { return v < 0 ? -v : v; };
    Int worst = 0;
    for (const auto& p : polys) {
        Int acc = mag(p.c);
        for (const auto& [k, v] : p.lin) acc += mag(v) * bound;
        for (const auto& [k, v] : p.quad) acc += mag(v) * bound * bound;
        if (acc > worst) worst = acc;
    }
    for (size_t e = 0; e < F.base.size(); ++e) {
        Int acc = mag(F.base[e]);
        for (int k = 0; k < F.dim; ++k) acc += mag(F.coef[e][k]) * bound;
        if (acc > worst) worst = acc;
    }
    return worst;
}

std::vector<FastPoly<long long>> narrow_polys(const std::vector<FastPoly<Int>>& polys)
{
    std::vector<FastPoly<long long>> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        FastPoly<long long> q;
        q.c = static_cast<long long>(p.c);
        for (const auto& [k, v] : p.lin) q.lin.push_back({k, static_cast<long long>(v)});
        for (const auto& [k, v] : p.quad) q.quad.push_back({k, static_cast<long long>(v)});
        out.push_back(std::move(q));
    }
    return out;
}

// The box is swept depth first along a fixed parameter order.  A prefix is
// abandoned exactly when some residual polynomial whose parameters are all
// assigned evaluates nonzero; any completion of such a prefix fails the
// filter, so the surviving set equals the brute-force sweep.
struct SearchPlan {
    std::vector<int> var_order;             // depth -> parameter index
    std::vector<std::vector<int>> triggers; // depth -> polys decided there
    std::vector<int> upfront;               // constant polys
};

template <class S>
SearchPlan make_plan(const std::vector<FastPoly<S>>& polys, int dim)
{
    std::vector<std::vector<int>> vars_of(polys.size());
    for (size_t p = 0; p < polys.size(); ++p) {
        std::vector<bool> seen(dim, false);
        for (const auto& [k, v] : polys[p].lin) seen[k] = true;
        for (const auto& [k, v] : polys[p].quad) seen[k.first] = seen[k.second] = true;
        for (int k = 0; k < dim; ++k)
            if (seen[k]) vars_of[p].push_back(k);
    }

    SearchPlan plan;
    std::vector<bool> placed(dim, false);
    std::vector<bool> covered(polys.size(), false);
    // cluster the parameters so that small polynomials complete early
    while (true) {
        int best = -1;
        size_t best_missing = 0;
        for (size_t p = 0; p < polys.size(); ++p) {
            if (covered[p]) continue;
            size_t missing = 0;
            for (int v : vars_of[p])
                if (!placed[v]) ++missing;
            if (best < 0 || missing < best_missing) {
                best = static_cast<int>(p);
                best_missing = missing;
            }
        }
        if (best < 0) break;
        covered[best] = true;
        for (int v : vars_of[best])
            if (!placed[v]) {
                placed[v] = true;
                plan.var_order.push_back(v);
            }
    }
    for (int v = 0; v < dim; ++v)
        if (!placed[v]) plan.var_order.push_back(v);

    std::vector<int> depth_of(dim, -1);
    for (size_t d = 0; d < plan.var_order.size(); ++d) depth_of[plan.var_order[d]] = static_cast<int>(d);
    plan.triggers.assign(dim, {});
    for (size_t p = 0; p < polys.size(); ++p) {
        if (vars_of[p].empty()) {
            plan.upfront.push_back(static_cast<int>(p));
            continue;
        }
        int last = 0;
        for (int v : vars_of[p]) last = std::max(last, depth_of[v]);
        plan.triggers[last].push_back(static_cast<int>(p));
    }
    return plan;
}

struct EnumBudget {
    Int limit;
    std::atomic<long long> visited{0};
    std::atomic<bool> exceeded{false};

    bool charge()
    {
        long long seen = ++visited;
        if (Int(seen) > limit) {
            exceeded = true;
            return false;
        }
        return true;
    }
};

template <class S>
void dfs_box(const std::vector<FastPoly<S>>& polys, const SearchPlan& plan, int bound,
             const IntAffineF& F, std::vector<S>& t, int depth, EnumBudget& budget,
             std::vector<std::vector<S>>& found)
{
    const int dim = F.dim;
    if (depth == dim) {
        const int n = F.size;
        std::vector<S> fvals(n * n);
        for (int e = 0; e < n * n; ++e) {
            S acc = static_cast<S>(F.base[e]);
            for (int k = 0; k < dim; ++k) acc += static_cast<S>(F.coef[e][k]) * t[k];
            fvals[e] = acc;
        }
        found.push_back(std::move(fvals));
        return;
    }
    const int var = plan.var_order[depth];
    for (int v = -bound; v <= bound; ++v) {
        if (budget.exceeded) return;
        if (!budget.charge()) return;
        t[var] = S(v);
        bool ok = true;
        for (int p : plan.triggers[depth])
            if (polys[p].eval(t) != S(0)) {
                ok = false;
                break;
            }
        if (ok) dfs_box(polys, plan, bound, F, t, depth + 1, budget, found);
    }
    t[var] = S(0);
}

template <class S>
std::vector<std::vector<S>> enumerate_box(const std::vector<FastPoly<S>>& polys, int bound,
                                          const IntAffineF& F, int threads, EnumBudget& budget)
{
    const int dim = F.dim;
    SearchPlan plan = make_plan(polys, dim);

    std::vector<S> zero(static_cast<size_t>(std::max(dim, 1)), S(0));
    for (int p : plan.upfront)
        if (polys[p].eval(zero) != S(0)) return {};

    if (dim == 0) {
        std::vector<std::vector<S>> found;
        std::vector<S> t(1, S(0));
        dfs_box(polys, plan, bound, F, t, 0, budget, found);
        return found;
    }

    const int span = 2 * bound + 1;
    int nthreads = std::max(1, std::min(threads, span));
    std::vector<std::vector<std::vector<S>>> results(nthreads);
    std::vector<std::thread> pool;
    for (int slot = 0; slot < nthreads; ++slot) {
        pool.emplace_back([&, slot]() {
            std::vector<S> t(dim, S(0));
            const int var = plan.var_order[0];
            for (int v = -bound; v <= bound; ++v) {
                if ((v + bound) % nthreads != slot) continue;
                if (budget.exceeded) return;
                if (!budget.charge()) return;
                t[var] = S(v);
                bool ok = true;
                for (int p : plan.triggers[0])
                    if (polys[p].eval(t) != S(0)) {
                        ok = false;
                        break;
                    }
                if (ok) dfs_box(polys, plan, bound, F, t, 1, budget, results[slot]);
            }
        });
    }
    for (auto& th : pool) th.join();

    std::vector<std::vector<S>> all;
    for (auto& r : results)
        for (auto& v : r) all.push_back(std::move(v));
    return all;
}

} // namespace

LiftClassification enumerate_lifts_oracle(const LiftConstraintSystem& system, int bound, Int limit)
{
    if (bound < 1) throw domain_error("enumeration bound must be at least 1");
    const int n = system.size;

    auto aff = solve_integer(system.lin_lhs, system.lin_rhs);
    LiftClassification out;
    out.method = LiftMethod::bounded_enumeration;
    if (!aff.consistent) return out;

    if (auto cand = candidate_vector(system)) aff.particular = *cand;

    IntAffineF F;
    F.size = n;
    F.dim = aff.basis.cols();
    F.base.resize(n * n);
    F.coef.assign(n * n, std::vector<Int>(F.dim, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int idx = system.f_index(i, j);
            F.base[i * n + j] = aff.particular[idx];
            for (int k = 0; k < F.dim; ++k) F.coef[i * n + j][k] = aff.basis(idx, k);
        }

    if (limit < 1) throw domain_error("enumeration limit must be positive");

    const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    EnumBudget budget{limit};
    std::vector<IntMat> sols;
    auto exact_polys = residual_polys(F, system.intersection, system.orientation);
    const Int safe = Int(1) << 62;
    if (enumeration_value_bound(exact_polys, F, bound) < safe) {
        auto polys = narrow_polys(exact_polys);
        auto found = enumerate_box<long long>(polys, bound, F, threads, budget);
        for (const auto& v : found) {
            IntMat m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = Int(v[i * n + j]);
            sols.push_back(std::move(m));
        }
    } else {
        auto found = enumerate_box<Int>(exact_polys, bound, F, threads, budget);
        for (const auto& v : found) {
            IntMat m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
            sols.push_back(std::move(m));
        }
    }
    if (budget.exceeded)
        throw domain_error("enumeration over a box of dimension " + std::to_string(F.dim) +
                           " exceeded the configured limit of " + kd::to_string(limit) +
                           " candidates");

    sort_and_dedup(sols);
    for (const auto& m : sols)
        if (!system.satisfied_by(m))
            throw internal_error("enumeration produced an invalid lift");
    out.solutions = std::move(sols);
    return out;
}

} // namespace kd
