#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qk3 {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised by text parsers; `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Exact element re + im*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// a * conj(a), always a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    /// *this -= a * b without building the temporary product.
    void sub_mul(const GaussianRational& a, const GaussianRational& b);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text form: `3`, `-1/2*i`, `1+i`, `2/3-5*i`.
    std::string to_string() const;
    static GaussianRational parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

GaussianRational pow(GaussianRational base, unsigned exponent);

/// Least common multiple of the denominators of both parts.
BigInt common_denominator(const GaussianRational& a);

/// Exact text form of a rational: `3`, `-1/2`.
std::string rational_to_string(const Rational& q);

}  // namespace qk3
