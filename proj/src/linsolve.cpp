#include "kd/linsolve.hpp"

#include <numeric>

namespace kd {

RationalAffineSet solve_rational(const RatMat& A, const RatMat& b)
{
    const int m = A.rows(), n = A.cols();
    if (b.rows() != m || b.cols() != 1) throw domain_error("solve_rational shape mismatch");

    RatMat a(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = A(i, j);
        a(i, n) = b(i, 0);
    }

    std::vector<int> pivot_of_row(m, -1);
    std::vector<int> row_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int p = -1;
        for (int i = rank; i < m; ++i)
            if (a(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != rank) a.swap_rows(p, rank);
        Rat d = a(rank, col);
        for (int j = col; j <= n; ++j) a(rank, j) /= d;
        for (int i = 0; i < m; ++i) {
            if (i == rank || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = col; j <= n; ++j) a(i, j) -= f * a(rank, j);
        }
        pivot_of_row[rank] = col;
        row_of_col[col] = rank;
        ++rank;
    }

    RationalAffineSet r;
    for (int i = rank; i < m; ++i)
        if (a(i, n) != 0) return r; // inconsistent
    r.consistent = true;

    r.particular = RatMat(n, 1);
    for (int i = 0; i < rank; ++i) r.particular(pivot_of_row[i], 0) = a(i, n);

    std::vector<int> free_cols;
    for (int col = 0; col < n; ++col)
        if (row_of_col[col] < 0) free_cols.push_back(col);

    r.nullspace = RatMat(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        std::vector<Rat> v(n, Rat(0));
        v[fc] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_of_row[i]] = -a(i, fc);
        // clear denominators, divide out content, normalize sign
        Int lcm = 1;
        for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        Int content = 0;
        std::vector<Int> w(n);
        for (int i = 0; i < n; ++i) {
            w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
            content = boost::multiprecision::gcd(content, w[i]);
        }
        if (content == 0) content = 1;
        Int lead = 0;
        for (int i = 0; i < n; ++i)
            if (w[i] != 0) { lead = w[i]; break; }
        if (lead < 0) content = -content;
        for (int i = 0; i < n; ++i) r.nullspace(i, static_cast<int>(k)) = Rat(w[i] / content);
    }
    return r;
}

IntegerAffineSet solve_integer(const IntMat& A, const std::vector<Int>& b)
{
    const int m = A.rows(), n = A.cols();
    if (static_cast<int>(b.size()) != m) throw domain_error("solve_integer shape mismatch");

    auto snf = smith_normal_form(A);
    std::vector<Int> ub(m, 0);
    for (int i = 0; i < m; ++i) {
        Int acc = 0;
        for (int j = 0; j < m; ++j) acc += snf.U(i, j) * b[j];
        ub[i] = acc;
    }

    IntegerAffineSet r;
    std::vector<Int> z(n, 0);
    std::vector<int> free_idx;
    for (int i = 0; i < n; ++i) {
        Int d = i < std::min(m, n) ? snf.D(i, i) : Int(0);
        Int rhs = i < m ? ub[i] : Int(0);
        if (d == 0) {
            if (i < m && rhs != 0) return r; // inconsistent
            free_idx.push_back(i);
        } else {
            if (rhs % d != 0) return r; // no integral solution
            z[i] = rhs / d;
        }
    }
    for (int i = n; i < m; ++i)
        if (ub[i] != 0) return r;

    r.consistent = true;
    r.particular.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j) acc += snf.V(i, j) * z[j];
        r.particular[i] = acc;
    }
    r.basis = IntMat(n, static_cast<int>(free_idx.size()));
    for (size_t k = 0; k < free_idx.size(); ++k)
        for (int i = 0; i < n; ++i) r.basis(i, static_cast<int>(k)) = snf.V(i, free_idx[k]);
    return r;
}

} // namespace kd
