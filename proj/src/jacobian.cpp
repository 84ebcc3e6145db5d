#include "kd/jacobian.hpp"

#include <algorithm>

namespace kd {

RatMat SymmetricPeriodData::real_part() const
{
    RatMat r(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) r(i, j) = Rat(A(i, j), 2);
    return r;
}

SymmetricPeriodData make_symmetric_period(const IntMat& A, const RatMat& Y)
{
    if (!A.is_square() || !A.is_symmetric()) throw domain_error("A must be square symmetric");
    if (!Y.is_square() || Y.rows() != A.rows()) throw domain_error("Y must match A in size");
    if (Y.transpose() != Y) throw domain_error("Y must be symmetric");
    for (int k = 1; k <= Y.rows(); ++k) {
        if (det(Y.submatrix(0, 0, k, k)) <= 0)
            throw domain_error("Y is not positive definite (leading minor " + std::to_string(k) +
                               " is not positive)");
    }
    return SymmetricPeriodData{A.rows(), A, Y};
}

std::vector<Rat> RealPartDescription::alpha_offset(const std::vector<int>& rep) const
{
    std::vector<Rat> off(rep.size());
    for (size_t i = 0; i < rep.size(); ++i) off[i] = Rat(rep[i], 2);
    return off;
}

RealPartDescription real_part_components(const IntMat& A)
{
    if (!A.is_square() || !A.is_symmetric()) throw domain_error("A must be square symmetric");
    const int s = A.rows();

    // kernel of A over GF(2)
    std::vector<std::vector<int>> m(s, std::vector<int>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) m[i][j] = static_cast<int>(((A(i, j) % 2) + 2) % 2);

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < s && row < s; ++col) {
        int p = -1;
        for (int i = row; i < s; ++i)
            if (m[i][col]) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        for (int i = 0; i < s; ++i)
            if (i != row && m[i][col])
                for (int j = 0; j < s; ++j) m[i][j] ^= m[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    const int rank2 = row;

    std::vector<std::vector<int>> kernel;
    std::vector<bool> is_pivot(s, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < s; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(s, 0);
        v[free] = 1;
        for (int r = 0; r < rank2; ++r) v[pivot_col[r]] = m[r][free];
        kernel.push_back(v);
    }

    const int kdim = static_cast<int>(kernel.size());
    if (kdim > 24) throw domain_error("mod-2 kernel too large to enumerate");

    RealPartDescription out;
    out.size = s;
    out.component_rank = s;
    out.component_count = Int(1) << kdim;
    for (long long mask = 0; mask < (1LL << kdim); ++mask) {
        std::vector<int> v(s, 0);
        for (int b = 0; b < kdim; ++b)
            if (mask & (1LL << b))
                for (int i = 0; i < s; ++i) v[i] ^= kernel[b][i];
        out.representatives.push_back(v);
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    return out;
}

KleinJacobian klein_jacobian(const SurfaceSpec& spec)
{
    CoveringData cover = complex_double(spec);
    AdaptedBasis adapted = adapt_basis(cover.symmetry_matrix, cover.intersection);
    const int s = spec.homology_rank();

    // Free-part coordinates of the projections of the adapted g_j columns.
    IntMat proj = cover.projection_matrix * adapted.C.submatrix(0, 0, 2 * s, s);

    KleinJacobian kj;
    kj.genus = spec.genus;
    kj.basis_labels = cover.basisB;
    kj.period_table = RatMat(s, s);

    std::vector<bool> used(s, false);
    for (int j = 0; j < s; ++j) {
        if (proj(cover.torsion_row, j) % 2 != 0)
            throw internal_error("adapted basis vector projects onto the torsion class");
        int hit = -1;
        Int sign = 0;
        int free_row = 0;
        for (int row = 0; row < proj.rows(); ++row) {
            if (row == cover.torsion_row) continue;
            const Int& v = proj(row, j);
            if (v != 0) {
                if (hit >= 0 || (v != 2 && v != -2))
                    throw internal_error("projection of adapted vector is not twice a basis vector");
                hit = free_row;
                sign = v / 2;
            }
            ++free_row;
        }
        if (hit < 0 || used[hit])
            throw internal_error("adapted vectors do not hit distinct free basis vectors");
        used[hit] = true;
        kj.period_table(hit, j) = Rat(sign, 2);
    }

    kj.lattice = Lattice::from_rows(kj.period_table);
    if (!lattice_equal(kj.lattice, Lattice::scaled_standard(s, Rat(1, 2))))
        throw internal_error("Klein lattice is not half the standard lattice");
    return kj;
}

IsomorphismCheck check_component_isomorphism(const KleinJacobian& kj,
                                             const RealPartDescription& rp)
{
    const int s = rp.size;
    if (kj.lattice.dim() != s) throw domain_error("dimension mismatch");

    IsomorphismCheck r;
    r.scaling = RatMat(s, s);
    for (int i = 0; i < s; ++i) r.scaling(i, i) = Rat(-1, 2);
    // image of Z^s under z -> -z/2
    Lattice image = Lattice::scaled_standard(s, Rat(-1, 2));
    r.holds = lattice_equal(image, kj.lattice);
    return r;
}

} // namespace kd
