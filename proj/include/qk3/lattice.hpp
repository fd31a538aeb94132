#pragma once

#include "qk3/arith.hpp"

#include <array>
#include <string>

namespace qk3 {

/// Even binary lattice with Gram matrix [[2a, b], [b, 2c]], i.e. the form
/// a x^2 + b xy + c y^2. Always positive definite.
class GramMatrix2 {
public:
    /// Form coefficients; throws std::invalid_argument unless a, c > 0 and b^2 - 4ac < 0.
    GramMatrix2(BigInt a, BigInt b, BigInt c);
    /// Gram entries g11, g12, g22; throws unless g11 and g22 are even.
    static GramMatrix2 from_entries(const BigInt& g11, const BigInt& g12, const BigInt& g22);

    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    const BigInt& c() const noexcept { return c_; }
    /// [2a, b, 2c]
    std::array<BigInt, 3> entries() const;
    BigInt determinant() const { return 4 * a_ * c_ - b_ * b_; }
    std::string to_string() const;

    friend bool operator==(const GramMatrix2&, const GramMatrix2&) = default;

private:
    BigInt a_, b_, c_;
};

/// Integer 2x2 matrix, row-major.
using Unimodular2 = std::array<std::array<BigInt, 2>, 2>;

/// U * G * U^T for a 2x2 integer U.
GramMatrix2 transform(const GramMatrix2& g, const Unimodular2& u);

struct ReducedGram {
    GramMatrix2 form;
    Unimodular2 transform;  ///< det 1, form = transform * G * transform^T
};

/// Gauss reduction: |b| <= a <= c, and b >= 0 when |b| = a or a = c.
ReducedGram reduce_gram(const GramMatrix2& g);

/// SL_2(Z)-equivalence.
bool is_isomorphic(const GramMatrix2& g1, const GramMatrix2& g2);

}  // namespace qk3
