#include "qk3/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace qk3 {

UPoly::UPoly(Vector coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, GaussianRational c) {
    Vector v(static_cast<std::size_t>(degree + 1));
    v.back() = std::move(c);
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UPoly::operator[](int k) const {
    if (k < 0 || k > degree()) return GaussianRational(0);
    return c_[static_cast<std::size_t>(k)];
}

GaussianRational UPoly::evaluate(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    Vector d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    const GaussianRational inv = lead().inverse();
    Vector v = c_;
    for (auto& x : v) x *= inv;
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    Vector v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    Vector v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Vector v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    Vector r = a.c_;
    Vector q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const GaussianRational inv = b.lead().inverse();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        GaussianRational factor = r[k + db] * inv;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j].sub_mul(factor, b.c_[j]);
        q[k] = std::move(factor);
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("square-free decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    const UPoly m = f.monic();
    if (m.degree() == 0) return out;
    UPoly a = gcd(m, m.derivative());
    UPoly b = divmod(m, a).first;
    UPoly c = divmod(m.derivative(), a).first;
    UPoly d = c - b.derivative();
    for (int k = 1; b.degree() > 0; ++k) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, k);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
    }
    return out;
}

std::vector<int> squarefree_profile(const HomPoly& f) {
    if (f.nvars() != 2) throw std::invalid_argument("squarefree_profile needs a binary form");
    if (f.is_zero()) throw std::domain_error("squarefree_profile of the zero form");
    // multiplicity of the root [1:0] is the least power of the second variable
    int at_infinity = f.degree();
    Vector dehom(static_cast<std::size_t>(f.degree() + 1));
    for (const auto& [e, c] : f.terms()) {
        at_infinity = std::min<int>(at_infinity, e[1]);
        dehom[e[0]] = c;
    }
    std::vector<int> profile;
    if (at_infinity > 0) profile.push_back(at_infinity);
    for (const auto& [g, k] : squarefree_decomposition(UPoly(std::move(dehom))))
        for (int j = 0; j < g.degree(); ++j) profile.push_back(k);
    std::sort(profile.rbegin(), profile.rend());
    return profile;
}

UPoly characteristic_polynomial(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    Vector c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t j = 0; j < n; ++j) mk(j, j) += c[n - k + 1];
        Matrix am = a * mk;
        GaussianRational tr;
        for (std::size_t j = 0; j < n; ++j) tr += am(j, j);
        c[n - k] = -tr / GaussianRational(static_cast<long>(k));
    }
    return UPoly(std::move(c));
}

namespace {

// Gaussian integer as a pair of big integers.
struct GInt {
    BigInt re, im;
};

BigInt isqrt_ceil(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) ++r;
    return r;
}

BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt invert(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("non-invertible residue during lifting");
    return r;
}

bool small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomial over Z/m given low-to-high residues.
BigInt eval_mod(const std::vector<BigInt>& poly, const BigInt& x, const BigInt& m) {
    BigInt acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = mod(acc * x + *it, m);
    return acc;
}

std::vector<BigInt> derivative_mod(const std::vector<BigInt>& poly, const BigInt& m) {
    std::vector<BigInt> d;
    for (std::size_t k = 1; k < poly.size(); ++k) d.push_back(mod(poly[k] * static_cast<unsigned long>(k), m));
    return d;
}

// gcd over F_p, returns degree.
int gcd_degree_mod(std::vector<long long> a, std::vector<long long> b, long long p) {
    auto trim = [](std::vector<long long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto inv = [p](long long x) {
        long long r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            long long f = a.back() * inv(b.back()) % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

std::vector<BigInt> image_mod(const std::vector<GInt>& h, const BigInt& s, const BigInt& m) {
    std::vector<BigInt> out;
    for (const auto& c : h) out.push_back(mod(c.re + c.im * s, m));
    return out;
}

}  // namespace

std::vector<GaussianRational> gaussian_rational_roots(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    if (f.degree() == 0) return {};
    const UPoly g = divmod(f.monic(), gcd(f, f.derivative())).first.monic();
    const int n = g.degree();
    if (n == 1) return {-g[0]};

    // Scale to Gaussian-integer coefficients; the leading one becomes D.
    BigInt den = 1;
    for (const auto& c : g.coeffs()) {
        BigInt d = common_denominator(c);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    // h(s) = D^(n-1) g(s/D) * D is monic over Z[i]; its roots are Gaussian integers.
    std::vector<GInt> h(static_cast<std::size_t>(n + 1));
    BigInt dpow = 1;  // D^(n-1-k), filled from k = n-1 downwards
    h[static_cast<std::size_t>(n)] = {1, 0};
    for (int k = n - 1; k >= 0; --k) {
        const GaussianRational a = g[k] * GaussianRational(Rational(den));
        BigInt re = a.re().get_num(), im = a.im().get_num();
        h[static_cast<std::size_t>(k)] = {re * dpow, im * dpow};
        dpow *= den;
    }
    BigInt bound = 0;
    for (int k = 0; k < n; ++k) {
        const auto& c = h[static_cast<std::size_t>(k)];
        BigInt mag = isqrt_ceil(c.re * c.re + c.im * c.im);
        if (mag > bound) bound = mag;
    }
    bound += 1;

    // Pick a small prime p = 1 (mod 4) where both embeddings keep h square-free.
    unsigned long p = 97;
    BigInt s0;
    for (;; p += 4) {
        if (!small_prime(p)) continue;
        const BigInt P(p);
        unsigned long c = 2;
        BigInt e = (P - 1) / 4, t;
        for (;; ++c) {
            BigInt base(c), half = (P - 1) / 2, r;
            mpz_powm(r.get_mpz_t(), base.get_mpz_t(), half.get_mpz_t(), P.get_mpz_t());
            if (r == P - 1) {
                mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
                break;
            }
        }
        bool ok = true;
        for (const BigInt& s : {BigInt(t), BigInt(P - t)}) {
            auto img = image_mod(h, s, P);
            std::vector<long long> a, da;
            for (const auto& x : img) a.push_back(x.get_si());
            for (const auto& x : derivative_mod(img, P)) da.push_back(x.get_si());
            if (gcd_degree_mod(a, da, static_cast<long long>(p)) != 0) ok = false;
        }
        if (ok) {
            s0 = t;
            break;
        }
    }

    // Precision p^K > 2*bound + 1, then Newton-lift sqrt(-1) and the roots.
    const BigInt P(p);
    BigInt modulus = P;
    int iterations = 0;
    while (modulus <= 2 * bound + 1) {
        modulus *= P;
    }
    for (BigInt q = P; q <= modulus; q *= q) ++iterations;
    ++iterations;
    BigInt s = s0;
    for (int it = 0; it < iterations; ++it) s = mod(s - (s * s + 1) * invert(mod(2 * s, modulus), modulus), modulus);

    auto lifted_roots = [&](const BigInt& sq) {
        auto low = image_mod(h, mod(sq, P), P);
        auto full = image_mod(h, sq, modulus);
        auto dfull = derivative_mod(full, modulus);
        std::vector<BigInt> roots;
        for (unsigned long x = 0; x < p; ++x) {
            if (eval_mod(low, BigInt(x), P) != 0) continue;
            BigInt r(x);
            for (int it = 0; it < iterations; ++it)
                r = mod(r - eval_mod(full, r, modulus) * invert(eval_mod(dfull, r, modulus), modulus), modulus);
            roots.push_back(r);
        }
        return roots;
    };
    const auto direct = lifted_roots(s);
    const auto conj = lifted_roots(mod(-s, modulus));

    const BigInt inv2 = invert(BigInt(2), modulus);
    const BigInt inv2s = invert(mod(2 * s, modulus), modulus);
    const BigInt half = modulus / 2;
    auto symmetric = [&](BigInt x) {
        x = mod(x, modulus);
        if (x > half) x -= modulus;
        return x;
    };
    UPoly hpoly([&] {
        Vector v;
        for (const auto& c : h) v.emplace_back(Rational(c.re), Rational(c.im));
        return v;
    }());
    std::vector<GaussianRational> roots;
    for (const auto& a : direct)
        for (const auto& b : conj) {
            BigInt u = symmetric((a + b) * inv2);
            BigInt v = symmetric((a - b) * inv2s);
            if (abs(u) > bound || abs(v) > bound) continue;
            GaussianRational cand{Rational(u), Rational(v)};
            if (!hpoly.evaluate(cand).is_zero()) continue;
            GaussianRational root = cand / GaussianRational(Rational(den));
            if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
        }
    std::sort(roots.begin(), roots.end(), [](const GaussianRational& x, const GaussianRational& y) {
        if (x.re() != y.re()) return x.re() < y.re();
        return x.im() < y.im();
    });
    return roots;
}

}  // namespace qk3
