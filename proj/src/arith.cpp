#include "qk3/arith.hpp"

#include <cctype>

namespace qk3 {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
    if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
        re_ -= a.re_ * b.re_;
        return;
    }
    re_ -= a.re_ * b.re_ - a.im_ * b.im_;
    im_ -= a.re_ * b.im_ + a.im_ * b.re_;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return rational_to_string(re_);
    std::string imag;
    Rational mag = abs(im_);
    if (mag == 1) {
        imag = "i";
    } else {
        imag = rational_to_string(mag) + "*i";
    }
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return rational_to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    BigInt digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected digits", start);
        return BigInt(std::string(s.substr(start, pos - start)));
    }
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    Cursor c{text};
    GaussianRational total;
    bool first = true;
    for (;;) {
        c.skip_ws();
        if (c.pos >= text.size()) {
            if (first) throw ParseError("empty Gaussian rational", c.pos);
            break;
        }
        int sign = 1;
        if (c.accept('+')) {
        } else if (c.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", c.pos);
        }
        Rational value(1);
        bool have_number = false;
        if (c.at_digit()) {
            BigInt num = c.digits();
            BigInt den(1);
            if (c.accept('/')) {
                std::size_t at = c.pos;
                den = c.digits();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            value = Rational(num, den);
            value.canonicalize();
            have_number = true;
        }
        bool imaginary = false;
        if (have_number && c.accept('*')) {
            if (!c.accept('i')) throw ParseError("expected 'i' after '*'", c.pos);
            imaginary = true;
        } else if (c.accept('i')) {
            imaginary = true;
        } else if (!have_number) {
            throw ParseError("expected number or 'i'", c.pos);
        }
        if (sign < 0) value = -value;
        if (imaginary) {
            total += GaussianRational(Rational(0), value);
        } else {
            total += GaussianRational(value);
        }
        first = false;
    }
    return total;
}

GaussianRational pow(GaussianRational base, unsigned exponent) {
    GaussianRational result(1);
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

BigInt common_denominator(const GaussianRational& a) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.re().get_den_mpz_t(), a.im().get_den_mpz_t());
    return out;
}

}  // namespace qk3
