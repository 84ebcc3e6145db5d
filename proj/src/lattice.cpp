#include "kd/lattice.hpp"

namespace kd {

Lattice Lattice::from_columns(int dim, const RatMat& generators)
{
    if (generators.rows() != dim) throw domain_error("lattice generators have wrong dimension");
    Lattice l;
    l.dim_ = dim;
    l.generators_ = generators;

    Int q = 1;
    for (int i = 0; i < generators.rows(); ++i)
        for (int j = 0; j < generators.cols(); ++j)
            q = boost::multiprecision::lcm(q, kd::denominator(generators(i, j)));

    IntMat scaled(dim, generators.cols());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < generators.cols(); ++j) {
            const Rat& v = generators(i, j);
            scaled(i, j) = numerator(v) * (q / kd::denominator(v));
        }

    IntMat h = generators.cols() > 0 ? hermite_normal_form(scaled).D : scaled;
    int nonzero = 0;
    for (int j = 0; j < h.cols(); ++j) {
        bool z = true;
        for (int i = 0; i < dim; ++i)
            if (h(i, j) != 0) z = false;
        if (!z) ++nonzero;
    }
    IntMat canonical(dim, nonzero);
    for (int j = 0; j < nonzero; ++j)
        for (int i = 0; i < dim; ++i) canonical(i, j) = h(i, j);

    Int content = q;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < nonzero; ++j)
            content = boost::multiprecision::gcd(content, canonical(i, j));
    if (content > 1) {
        q /= content;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < nonzero; ++j) canonical(i, j) /= content;
    }

    l.denominator_ = q;
    l.canonical_ = canonical;
    return l;
}

Lattice Lattice::from_rows(const RatMat& generators)
{
    return from_columns(generators.cols(), generators.transpose());
}

Lattice Lattice::scaled_standard(int dim, const Rat& scale)
{
    RatMat m(dim, dim);
    for (int i = 0; i < dim; ++i) m(i, i) = scale;
    return from_columns(dim, m);
}

RatMat Lattice::canonical_basis() const
{
    RatMat b(dim_, canonical_.cols());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < canonical_.cols(); ++j)
            b(i, j) = Rat(canonical_(i, j), denominator_);
    return b;
}

bool lattice_equal(const Lattice& a, const Lattice& b)
{
    if (a.dim() != b.dim()) throw domain_error("lattice comparison needs equal ambient dimension");
    return a.rank() == b.rank() && a.denominator() == b.denominator() &&
           a.canonical_numerator() == b.canonical_numerator();
}

} // namespace kd
