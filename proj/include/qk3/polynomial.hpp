#pragma once

#include "qk3/matrix.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qk3 {

/// Exponent vector; entries past the polynomial's variable count stay zero.
using Exponent = std::array<std::uint8_t, 4>;

/// Variable names: a polynomial in n variables uses the last n letters of
/// "XYZW", so ternary forms read F(Y,Z,W) and binary forms F(Z,W).
char variable_name(int nvars, int index);

/// All exponent vectors of the given degree in `nvars` variables, in the
/// canonical (graded lexicographic, X first) descending order.
const std::vector<Exponent>& monomials(int nvars, int degree);
std::size_t monomial_count(int nvars, int degree);
/// Position of `e` within `monomials(nvars, degree)`.
std::size_t monomial_index(int nvars, const Exponent& e);

/// Exact homogeneous polynomial over Q(i) in up to four variables.
class HomPoly {
public:
    using TermMap = std::map<Exponent, GaussianRational, std::greater<Exponent>>;

    HomPoly(int nvars, int degree);
    /// c * x_index, a linear form.
    static HomPoly variable(int nvars, int index, GaussianRational c = 1);
    static HomPoly constant(int nvars, GaussianRational c);
    static HomPoly monomial(int nvars, const Exponent& e, GaussianRational c = 1);
    /// Linear form sum coeffs[k] * x_k.
    static HomPoly linear_form(std::span<const GaussianRational> coeffs);

    int nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    GaussianRational coefficient(const Exponent& e) const;
    /// Coefficients in the order of `monomials(nvars, degree)`.
    Vector dense_coefficients() const;
    static HomPoly from_dense(int nvars, int degree, std::span<const GaussianRational> coeffs);

    /// Adds c to the coefficient of e, dropping it if it becomes zero.
    void add_term(const Exponent& e, const GaussianRational& c);

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    HomPoly& operator*=(const GaussianRational& s);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const GaussianRational& s, HomPoly a) { return a *= s; }
    HomPoly operator-() const;
    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    HomPoly pow(unsigned k) const;
    GaussianRational evaluate(std::span<const GaussianRational> point) const;
    /// Formal partial derivative with respect to variable `index`.
    HomPoly partial(int index) const;
    /// True if variable `index` occurs in some term.
    bool involves(int index) const;

    /// Re-expresses the polynomial in the listed variables only (in that
    /// order); throws if any other variable occurs.
    HomPoly select_variables(std::span<const int> vars) const;
    /// Embeds a polynomial in fewer variables into `nvars` variables, sending
    /// its k-th variable to `targets[k]`.
    HomPoly embed(int nvars, std::span<const int> targets) const;

    std::string to_string() const;

private:
    int nvars_;
    int degree_;
    TermMap terms_;
};

/// Parses text in the variables X,Y,Z,W (or the last `nvars` of them).
/// Throws ParseError on syntax errors, inhomogeneous input and degree mismatch.
HomPoly parse_polynomial(std::string_view text, int expected_degree, int nvars = 4);

/// F o M: substitutes x_j -> sum_c M(j,c) y_c. M must have F.nvars() rows;
/// the result lives in M.cols() variables.
HomPoly substitute_linear(const HomPoly& f, const Matrix& m);

std::vector<HomPoly> partials(const HomPoly& f);

/// F = sum_k c_k * x_chart^(4-k); c_k has degree k and does not involve the
/// chart variable (it stays a polynomial in all four variables).
struct XDecomposition {
    int chart = 0;
    std::array<HomPoly, 5> c{HomPoly(4, 0), HomPoly(4, 1), HomPoly(4, 2), HomPoly(4, 3), HomPoly(4, 4)};

    HomPoly reassemble() const;
};

XDecomposition x_decompose(const HomPoly& f, int chart);

/// Projective point with canonical coordinates (first nonzero entry is 1).
class ProjPoint {
public:
    explicit ProjPoint(Vector coords);
    static ProjPoint coordinate(int index, int dim = 4);
    /// Colon-separated coordinates, e.g. "1:0:0:0" or "1:i:0:-1/2".
    static ProjPoint parse(std::string_view text);

    const Vector& coords() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    std::size_t leading_index() const noexcept { return lead_; }
    std::string to_string() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
    /// Canonical order: earlier leading index first, then coordinate-wise by
    /// (real part, imaginary part).
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);

private:
    Vector coords_;
    std::size_t lead_ = 0;
};

/// e_0..e_4 with F(sP + tQ) = sum_k s^(4-k) t^k e_k(Q); e_k is a form of
/// degree k in the coordinates of Q.
std::array<HomPoly, 5> polar_forms(const HomPoly& f, const ProjPoint& p);

}  // namespace qk3
