#include "kd/adapt.hpp"

#include "kd/normal_form.hpp"

namespace kd {

IntMat standard_symplectic_form(int s)
{
    IntMat J(2 * s, 2 * s);
    for (int i = 0; i < s; ++i) {
        J(i, s + i) = 1;
        J(s + i, i) = -1;
    }
    return J;
}

bool is_symplectic_change(const IntMat& C, const IntMat& J)
{
    if (!C.is_square() || !J.is_square() || C.rows() != J.rows())
        throw domain_error("symplectic check needs square matrices of equal size");
    return C.transpose() * J * C == J;
}

namespace {

void check_involution(const IntMat& S, const IntMat& J)
{
    if (!S.is_square() || S.rows() != J.rows() || S.rows() % 2 != 0)
        throw domain_error("adapt_basis needs a square even-sized involution");
    if (S * S != IntMat::identity(S.rows()))
        throw domain_error("adapt_basis: matrix is not an involution");
    if (S.transpose() * J * S != -J)
        throw domain_error("adapt_basis: involution is not anti-symplectic");
}

bool verify_adapted(const IntMat& S, const IntMat& J, const AdaptedBasis& r)
{
    const int s = S.rows() / 2;
    if (r.C.transpose() * J * r.C != standard_symplectic_form(s)) return false;
    Int dc = det(r.C);
    if (dc != 1 && dc != -1) return false;
    IntMat conj = inverse_unimodular(r.C) * S * r.C;
    if (!r.A.is_symmetric()) return false;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (conj(i, j) != (i == j ? 1 : 0)) return false;
            if (conj(i, s + j) != r.A(i, j)) return false;
            if (conj(s + i, j) != 0) return false;
            if (conj(s + i, s + j) != (i == j ? -1 : 0)) return false;
        }
    return true;
}

// Pattern for a 4-index block on which the involution is the anti-diagonal
// swap x_p <-> y_q, x_q <-> y_p.  Writes the four new-basis columns and the
// corresponding A entries.  Positions are 0-based column indices of
// (x_p, x_q, y_p, y_q) in the covering basis, and p, q are 0-based positions
// of the two pairs inside the new basis halves.
void fill_quadruple(IntMat& C, IntMat& A, int s, int xp, int xq, int yp, int yq, int p, int q)
{
    auto set_col = [&](int col, std::initializer_list<std::pair<int, int>> entries) {
        for (auto [row, val] : entries) C(row, col) += val;
    };
    set_col(p, {{xq, -1}, {yp, -1}});          // g_p = -(x_q + y_p)
    set_col(q, {{xp, -1}, {yq, -1}});          // g_q = -(x_p + y_q)
    set_col(s + p, {{xp, 1}, {xq, 1}, {yp, 1}}); // d_p = x_p + x_q + y_p
    set_col(s + q, {{xp, 1}, {xq, 1}, {yq, 1}}); // d_q = x_p + x_q + y_q
    A(p, p) = -2;
    A(q, q) = -2;
    A(p, q) = -1;
    A(q, p) = -1;
}

std::optional<AdaptedBasis> try_covering_pattern(const IntMat& S, const IntMat& J)
{
    const int size = S.rows();
    const int s = size / 2;

    // Odd family: S is the full anti-diagonal in basis (x1..xs, y1..ys).
    auto is_antidiagonal = [&]() {
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                if (S(i, j) != (i + j == size - 1 ? 1 : 0)) return false;
        return true;
    };
    if (s % 2 == 0 && is_antidiagonal() && J == standard_symplectic_form(s)) {
        AdaptedBasis r{IntMat(size, size), IntMat(s, s)};
        const int n = s / 2;
        for (int j = 1; j <= n; ++j) {
            int jp = s + 1 - j;
            fill_quadruple(r.C, r.A, s, j - 1, jp - 1, s + j - 1, s + jp - 1, j - 1, jp - 1);
        }
        return r;
    }

    // Even family: basis (x1, y1, x2..xs, y2..ys); a 2x2 block on the first
    // pair and the anti-diagonal swap on the rest.
    if (s % 2 == 1 && s >= 3) {
        IntMat corner = S.submatrix(0, 0, 2, 2);
        IntMat m_block{{1, 0}, {2, -1}};
        IntMat diag_block{{-1, 0}, {0, 1}};
        bool is_m = corner == m_block;
        bool is_diag = corner == diag_block;
        if (is_m || is_diag) {
            AdaptedBasis r{IntMat(size, size), IntMat(s, s)};
            if (is_m) {
                // fixed vector x1 + y1; partner x1 + 2 y1
                r.C(0, 0) = 1;
                r.C(1, 0) = 1;
                r.C(0, s) = 1;
                r.C(1, s) = 2;
            } else {
                // fixed vector y1; partner -x1 + y1
                r.C(1, 0) = 1;
                r.C(0, s) = -1;
                r.C(1, s) = 1;
            }
            r.A(0, 0) = 2;
            const int n = (s - 1) / 2;
            auto xpos = [&](int k) { return k == 1 ? 0 : k; };
            auto ypos = [&](int k) { return k == 1 ? 1 : s + k - 1; };
            for (int j = 1; j <= n; ++j) {
                int k = 1 + j, kp = s + 1 - j;
                fill_quadruple(r.C, r.A, s, xpos(k), xpos(kp), ypos(k), ypos(kp), k - 1, kp - 1);
            }
            return r;
        }
    }
    return std::nullopt;
}

// General construction: the fixed lattice of S is Lagrangian; complete any of
// its bases to a symplectic basis by exact integer solves.
AdaptedBasis general_construction(const IntMat& S, const IntMat& J)
{
    const int size = S.rows();
    const int s = size / 2;

    // Saturated basis of ker(S - I) via the Smith form.
    auto snf = smith_normal_form(S - IntMat::identity(size));
    std::vector<std::vector<Int>> fixed_cols;
    for (int j = 0; j < size; ++j) {
        bool zero = j >= std::min(snf.D.rows(), snf.D.cols()) || snf.D(j, j) == 0;
        if (zero) fixed_cols.push_back(snf.V.col(j));
    }
    if (static_cast<int>(fixed_cols.size()) != s)
        throw domain_error("adapt_basis: fixed lattice does not have half rank");
    IntMat U = IntMat::from_columns(fixed_cols);

    // Dual vectors: solve (U^t J) X = I_s over the integers.
    IntMat G = U.transpose() * J;
    auto gs = smith_normal_form(G);
    IntMat X(size, s);
    for (int col = 0; col < s; ++col) {
        std::vector<Int> rhs(s, 0);
        rhs[col] = 1;
        // G = U_g^-1 D V_g^-1, solve G x = rhs
        std::vector<Int> ub(s, 0);
        for (int i = 0; i < s; ++i) {
            Int acc = 0;
            for (int j = 0; j < s; ++j) acc += gs.U(i, j) * rhs[j];
            ub[i] = acc;
        }
        std::vector<Int> z(size, 0);
        for (int i = 0; i < s; ++i) {
            if (gs.D(i, i) == 0) {
                if (ub[i] != 0) throw domain_error("adapt_basis: no adapted basis found");
                continue;
            }
            if (ub[i] % gs.D(i, i) != 0) throw domain_error("adapt_basis: no adapted basis found");
            z[i] = ub[i] / gs.D(i, i);
        }
        for (int i = 0; i < size; ++i) {
            Int acc = 0;
            for (int j = 0; j < size; ++j) acc += gs.V(i, j) * z[j];
            X(i, col) = acc;
        }
    }

    // Correct the dual half to be isotropic: X -= U * lower(X^t J X).
    IntMat P = X.transpose() * J * X;
    IntMat corr(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (i > j) corr(i, j) = P(i, j);
    X = X + U * corr;

    IntMat C(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < s; ++j) {
            C(i, j) = U(i, j);
            C(i, s + j) = X(i, j);
        }
    IntMat conj = inverse_unimodular(C) * S * C;
    AdaptedBasis r{C, conj.submatrix(0, s, s, s)};
    return r;
}

} // namespace

AdaptedBasis adapt_basis(const IntMat& S, const IntMat& J)
{
    check_involution(S, J);

    if (auto r = try_covering_pattern(S, J)) {
        if (verify_adapted(S, J, *r)) return *r;
    }
    AdaptedBasis r = general_construction(S, J);
    if (!verify_adapted(S, J, r))
        throw domain_error("adapt_basis: no adapted basis found");
    return r;
}

} // namespace kd
