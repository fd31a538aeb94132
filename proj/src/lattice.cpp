#include "qk3/lattice.hpp"

#include <stdexcept>

namespace qk3 {

GramMatrix2::GramMatrix2(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ <= 0 || c_ <= 0 || b_ * b_ - 4 * a_ * c_ >= 0)
        throw std::invalid_argument("Gram matrix is not positive definite");
}

GramMatrix2 GramMatrix2::from_entries(const BigInt& g11, const BigInt& g12, const BigInt& g22) {
    if (mpz_odd_p(g11.get_mpz_t()) || mpz_odd_p(g22.get_mpz_t()))
        throw std::invalid_argument("Gram matrix is not even");
    return GramMatrix2(g11 / 2, g12, g22 / 2);
}

std::array<BigInt, 3> GramMatrix2::entries() const { return {2 * a_, b_, 2 * c_}; }

std::string GramMatrix2::to_string() const {
    const auto e = entries();
    return e[0].get_str() + " " + e[1].get_str() + " " + e[2].get_str();
}

GramMatrix2 transform(const GramMatrix2& g, const Unimodular2& u) {
    // f(u11 x + u21 y, u12 x + u22 y) gives the form of U G U^T
    const auto& [r0, r1] = u;
    const BigInt a = g.a() * r0[0] * r0[0] + g.b() * r0[0] * r0[1] + g.c() * r0[1] * r0[1];
    const BigInt c = g.a() * r1[0] * r1[0] + g.b() * r1[0] * r1[1] + g.c() * r1[1] * r1[1];
    const BigInt b = 2 * g.a() * r0[0] * r1[0] + g.b() * (r0[0] * r1[1] + r0[1] * r1[0]) + 2 * g.c() * r0[1] * r1[1];
    return GramMatrix2(a, b, c);
}

namespace {

Unimodular2 multiply(const Unimodular2& x, const Unimodular2& y) {
    Unimodular2 z;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) z[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
    return z;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

}  // namespace

ReducedGram reduce_gram(const GramMatrix2& g) {
    BigInt a = g.a(), b = g.b(), c = g.c();
    Unimodular2 u{{{1, 0}, {0, 1}}};
    const Unimodular2 swap{{{0, 1}, {-1, 0}}};
    for (;;) {
        // shear y -> y + k x puts b into (-a, a]
        const BigInt k = floor_div(a - b, 2 * a);
        if (k != 0) {
            const BigInt nb = b + 2 * a * k;
            c = a * k * k + b * k + c;
            b = nb;
            u = multiply(Unimodular2{{{1, 0}, {k, 1}}}, u);
        }
        if (a <= c) break;
        std::swap(a, c);
        b = -b;
        u = multiply(swap, u);
    }
    if (a == c && b < 0) {
        b = -b;
        u = multiply(swap, u);
    }
    return {GramMatrix2(a, b, c), u};
}

bool is_isomorphic(const GramMatrix2& g1, const GramMatrix2& g2) {
    return reduce_gram(g1).form == reduce_gram(g2).form;
}

}  // namespace qk3
