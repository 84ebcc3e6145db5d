#include "kd/matrix.hpp"

namespace kd {

Int det(const IntMat& m)
{
    if (!m.is_square()) throw domain_error("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    // Bareiss: all divisions are exact.
    IntMat a = m;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rat det(const RatMat& m)
{
    if (!m.is_square()) throw domain_error("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    RatMat a = m;
    Rat result = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != k) {
            a.swap_rows(k, p);
            result = -result;
        }
        result *= a(k, k);
        Rat inv = Rat(1) / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            Rat f = a(i, k) * inv;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return result;
}

RatMat inverse(const RatMat& m)
{
    if (!m.is_square()) throw domain_error("inverse of non-square matrix");
    const int n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) { p = i; break; }
        if (p < 0) throw domain_error("matrix is singular");
        if (p != k) {
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
        }
        Rat d = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= d;
            inv(k, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IntMat inverse_unimodular(const IntMat& m)
{
    Int d = det(m);
    if (d != 1 && d != -1) throw domain_error("matrix is not unimodular");
    return to_int(inverse(to_rat(m)));
}

} // namespace kd
