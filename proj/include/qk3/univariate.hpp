#pragma once

#include "qk3/polynomial.hpp"

#include <utility>
#include <vector>

namespace qk3 {

/// Dense univariate polynomial over Q(i), coefficients from low to high degree.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Vector coeffs);
    static UPoly monomial(int degree, GaussianRational c = 1);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const Vector& coeffs() const noexcept { return c_; }
    const GaussianRational& lead() const { return c_.back(); }
    GaussianRational operator[](int k) const;

    GaussianRational evaluate(const GaussianRational& x) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    /// Quotient and remainder; throws on division by zero.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

private:
    void trim();
    Vector c_;
};

/// Monic gcd (zero if both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

/// Yun's square-free factorization: pairs (g_k, k) with f = lead * prod g_k^k,
/// each g_k monic and square-free; factors equal to 1 are omitted.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// Distinct roots of f lying in Q(i), in canonical order.
std::vector<GaussianRational> gaussian_rational_roots(const UPoly& f);

/// Root multiplicities of a nonzero binary form over C, computed exactly by
/// repeated gcds with derivatives (no root extraction). Sorted descending;
/// the multiplicities sum to the degree.
std::vector<int> squarefree_profile(const HomPoly& binary_form);

/// det(t*I - A).
UPoly characteristic_polynomial(const Matrix& a);

}  // namespace qk3
