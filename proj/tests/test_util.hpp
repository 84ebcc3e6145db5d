#pragma once

#include <random>

#include "kd/word.hpp"

namespace kdtest {

using namespace kd;

inline GeneratorSymbol gen(char name, int index = 0, int sheet = 0)
{
    return GeneratorSymbol{std::string(1, name), index, sheet};
}

inline Word glet(char name, int index = 0, int sheet = 0, int exp = 1)
{
    return Word::letter(gen(name, index, sheet), exp);
}

inline std::vector<Letter> random_letter_seq(std::mt19937& rng,
                                             const std::vector<GeneratorSymbol>& gens,
                                             int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> seq;
    int L = len(rng);
    for (int i = 0; i < L; ++i) seq.push_back(Letter{gens[pick(rng)], sign(rng) ? 1 : -1});
    return seq;
}

inline Word random_word(std::mt19937& rng, const std::vector<GeneratorSymbol>& gens, int max_len)
{
    return Word(random_letter_seq(rng, gens, max_len));
}

inline IntMat random_int_matrix(std::mt19937& rng, int rows, int cols, int magnitude)
{
    std::uniform_int_distribution<int> entry(-magnitude, magnitude);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

inline IntMat random_symmetric(std::mt19937& rng, int n, int magnitude)
{
    IntMat m = random_int_matrix(rng, n, n, magnitude);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
    return m;
}

// L L^t + I with random integer lower-triangular L: symmetric positive definite.
inline RatMat random_spd(std::mt19937& rng, int n, int magnitude)
{
    IntMat L(n, n);
    std::uniform_int_distribution<int> entry(-magnitude, magnitude);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) L(i, j) = entry(rng);
    IntMat m = L * L.transpose();
    for (int i = 0; i < n; ++i) m(i, i) += 1;
    RatMat r = to_rat(m);
    return r;
}

// Random unimodular matrix as a product of elementary row operations.
inline IntMat random_unimodular(std::mt19937& rng, int n, int ops)
{
    IntMat u = IntMat::identity(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> f(-2, 2);
    for (int k = 0; k < ops; ++k) {
        int i = pick(rng), j = pick(rng);
        if (i == j) {
            u.swap_rows(i, (i + 1) % n);
            continue;
        }
        u.add_row(i, j, f(rng));
    }
    return u;
}

} // namespace kdtest
