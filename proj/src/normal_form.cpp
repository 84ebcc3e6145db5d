#include "kd/normal_form.hpp"

namespace kd {

namespace {

Int abs_int(const Int& v) { return v < 0 ? -v : v; }

// Location of the smallest nonzero |entry| in the trailing block starting at s.
bool find_pivot(const IntMat& a, int s, int& pi, int& pj)
{
    bool found = false;
    Int best = 0;
    for (int i = s; i < a.rows(); ++i)
        for (int j = s; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs_int(a(i, j));
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

bool cross_is_clear(const IntMat& a, int s)
{
    for (int i = s + 1; i < a.rows(); ++i)
        if (a(i, s) != 0) return false;
    for (int j = s + 1; j < a.cols(); ++j)
        if (a(s, j) != 0) return false;
    return true;
}

} // namespace

NormalFormResult smith_normal_form(const IntMat& m)
{
    const int rows = m.rows(), cols = m.cols();
    NormalFormResult r{IntMat::identity(rows), m, IntMat::identity(cols)};
    IntMat& D = r.D;
    IntMat& U = r.U;
    IntMat& V = r.V;

    const int n = std::min(rows, cols);
    for (int s = 0; s < n; ++s) {
        int pi = 0, pj = 0;
        if (!find_pivot(D, s, pi, pj)) break; // trailing block is zero
        D.swap_rows(s, pi);
        U.swap_rows(s, pi);
        D.swap_cols(s, pj);
        V.swap_cols(s, pj);

        while (!cross_is_clear(D, s)) {
            for (int i = s + 1; i < rows; ++i) {
                if (D(i, s) == 0) continue;
                Int q = D(i, s) / D(s, s);
                if (q != 0) {
                    D.add_row(i, s, -q);
                    U.add_row(i, s, -q);
                }
            }
            for (int j = s + 1; j < cols; ++j) {
                if (D(s, j) == 0) continue;
                Int q = D(s, j) / D(s, s);
                if (q != 0) {
                    D.add_col(j, s, -q);
                    V.add_col(j, s, -q);
                }
            }
            // Remainders may survive when the pivot does not divide them;
            // move a smaller entry into pivot position and repeat.
            if (!cross_is_clear(D, s)) {
                find_pivot(D, s, pi, pj);
                D.swap_rows(s, pi);
                U.swap_rows(s, pi);
                D.swap_cols(s, pj);
                V.swap_cols(s, pj);
            }
        }

        // Pull in any entry the pivot does not divide, then redo this step.
        bool divides_all = true;
        for (int i = s + 1; i < rows && divides_all; ++i)
            for (int j = s + 1; j < cols; ++j)
                if (D(i, j) % D(s, s) != 0) {
                    D.add_row(s, i, 1);
                    U.add_row(s, i, 1);
                    divides_all = false;
                    break;
                }
        if (!divides_all) {
            --s;
            continue;
        }

        if (D(s, s) < 0) {
            D.scale_row(s, -1);
            U.scale_row(s, -1);
        }
    }

    if (U * m * V != D) throw internal_error("smith decomposition self-check failed");
    return r;
}

NormalFormResult hermite_normal_form(const IntMat& m)
{
    const int rows = m.rows(), cols = m.cols();
    NormalFormResult r{IntMat::identity(rows), m, IntMat::identity(cols)};
    IntMat& H = r.D;
    IntMat& V = r.V;

    int cur = 0; // next column to receive a pivot
    for (int row = 0; row < rows && cur < cols; ++row) {
        // Euclidean reduction across columns cur.. in this row.
        while (true) {
            int p = -1;
            Int best = 0;
            for (int j = cur; j < cols; ++j) {
                if (H(row, j) == 0) continue;
                Int v = abs_int(H(row, j));
                if (p < 0 || v < best) {
                    best = v;
                    p = j;
                }
            }
            if (p < 0) break; // row has no pivot; move to next row
            if (p != cur) {
                H.swap_cols(cur, p);
                V.swap_cols(cur, p);
            }
            bool clear = true;
            for (int j = cur + 1; j < cols; ++j) {
                if (H(row, j) == 0) continue;
                Int q = H(row, j) / H(row, cur);
                if (q != 0) {
                    H.add_col(j, cur, -q);
                    V.add_col(j, cur, -q);
                }
                if (H(row, j) != 0) clear = false;
            }
            if (clear) break;
        }
        if (H(row, cur) == 0) continue;

        if (H(row, cur) < 0) {
            H.scale_col(cur, -1);
            V.scale_col(cur, -1);
        }
        // Reduce earlier columns into [0, pivot) on the pivot row.
        for (int j = 0; j < cur; ++j) {
            Int q = H(row, j) / H(row, cur);
            if (H(row, j) - q * H(row, cur) < 0) q -= 1; // floor division
            if (q != 0) {
                H.add_col(j, cur, -q);
                V.add_col(j, cur, -q);
            }
        }
        ++cur;
    }

    if (m * V != H) throw internal_error("hermite decomposition self-check failed");
    return r;
}

} // namespace kd
