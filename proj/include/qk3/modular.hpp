#pragma once

#include "qk3/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qk3::modular {

/// A prime p = 1 (mod 4) below 2^62 together with a square root of -1 mod p.
/// Q(i) maps to F_p through i -> sqrt_minus_one (the "direct" embedding) or
/// i -> p - sqrt_minus_one (the "conjugate" embedding).
struct Prime {
    std::uint64_t p;
    std::uint64_t sqrt_minus_one;
};

/// k-th prime of the fixed descending sequence; deterministic and thread-safe.
const Prime& prime(std::size_t k);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Image of a Gaussian rational; nullopt when a denominator vanishes mod p.
std::optional<std::uint64_t> reduce(const GaussianRational& x, const Prime& pr, bool conjugate);

/// Dense row-major matrix over F_p in reduced row echelon form.
struct ModEchelon {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> rref;
    std::vector<std::size_t> pivots;

    std::uint64_t at(std::size_t r, std::size_t c) const { return rref[r * cols + c]; }
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan over F_p; row updates per pivot run in parallel.
ModEchelon row_reduce_mod(std::vector<std::uint64_t> data, std::size_t rows, std::size_t cols, std::uint64_t p);
/// Serial reference for `row_reduce_mod`.
ModEchelon row_reduce_mod_serial(std::vector<std::uint64_t> data, std::size_t rows, std::size_t cols,
                                 std::uint64_t p);

/// Reduces every entry of `m`; nullopt if some denominator is not invertible.
std::optional<std::vector<std::uint64_t>> image(const Matrix& m, const Prime& pr, bool conjugate);

/// n/d with |n|, d <= sqrt(modulus/2) and n/d = a (mod modulus), if one exists.
std::optional<Rational> rational_reconstruct(const BigInt& a, const BigInt& modulus);

/// Exact rank together with an exact kernel basis (RREF normalization).
/// The rank lower bound comes from a modular image; the matching upper bound
/// from kernel vectors lifted by CRT + rational reconstruction and verified
/// exactly against `m`. Falls back to exact elimination if lifting stalls.
struct CertifiedRank {
    std::size_t rank = 0;
    std::vector<Vector> kernel;
    bool lifted = false;  ///< true when certified through modular lifting
};

CertifiedRank certified_rank(const Matrix& m, std::size_t max_primes = 256);

/// Exact decision rank(m) == cols(m). One modular image suffices when true.
bool has_full_column_rank(const Matrix& m);

}  // namespace qk3::modular
