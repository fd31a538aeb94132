#pragma once

#include "qk3/linalg.hpp"
#include "qk3/polynomial.hpp"

#include <random>

namespace testing_support {

using namespace qk3;

inline GaussianRational random_gr(std::mt19937_64& rng, long range = 5, bool complex = true, long max_den = 3) {
    std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
    Rational re(BigInt(num(rng)), BigInt(den(rng))), im(BigInt(complex ? num(rng) : 0), BigInt(den(rng)));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

inline GaussianRational random_int(std::mt19937_64& rng, long range = 3) {
    std::uniform_int_distribution<long> d(-range, range);
    return GaussianRational(d(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range = 3) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_int(rng, range);
    return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n = 4, long range = 2) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, range);
        if (rank(m) == n) return m;
    }
}

/// Integer matrix with det 1 built from elementary shears.
inline Matrix random_unimodular(std::mt19937_64& rng, std::size_t n = 4, int steps = 6) {
    Matrix m = Matrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> k(-1, 1);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        Matrix e = Matrix::identity(n);
        e(a, b) = GaussianRational(k(rng));
        m = e * m;
    }
    return m;
}

/// Random form with about `terms` monomials and small Gaussian-integer coefficients.
inline HomPoly random_form(std::mt19937_64& rng, int nvars, int degree, std::size_t terms, long range = 3) {
    const auto& mons = monomials(nvars, degree);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    HomPoly f(nvars, degree);
    for (std::size_t t = 0; t < terms; ++t) {
        std::uniform_int_distribution<long> d(-range, range);
        f.add_term(mons[pick(rng)], GaussianRational(Rational(d(rng)), Rational(d(rng) / 2)));
    }
    return f;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, long range = 4) {
    Vector v(n);
    for (auto& x : v) x = random_gr(rng, range, true, 2);
    return v;
}

}  // namespace testing_support
