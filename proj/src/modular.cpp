#include "qk3/modular.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace qk3::modular {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1u) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("no inverse mod p");
    return pow_mod(a, p - 2, p);
}

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

bool is_prime(std::uint64_t n) {
    BigInt z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

Prime next_prime_below(std::uint64_t start) {
    std::uint64_t p = start;
    p -= (p % 4 + 3) % 4;  // p = 1 (mod 4)
    while (!is_prime(p)) p -= 4;
    std::uint64_t s = 0;
    for (std::uint64_t c = 2;; ++c) {
        if (pow_mod(c, (p - 1) / 2, p) == p - 1) {
            s = pow_mod(c, (p - 1) / 4, p);
            break;
        }
    }
    return {p, s};
}

std::uint64_t reduce_integer(const BigInt& z, std::uint64_t p) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::optional<std::uint64_t> reduce_rational(const Rational& q, std::uint64_t p) {
    std::uint64_t den = reduce_integer(q.get_den(), p);
    if (den == 0) return std::nullopt;
    return mul_mod(reduce_integer(q.get_num(), p), inv_mod(den, p), p);
}

}  // namespace

const Prime& prime(std::size_t k) {
    static std::mutex mu;
    static std::deque<Prime> primes;
    std::lock_guard<std::mutex> lock(mu);
    while (primes.size() <= k) {
        std::uint64_t start = primes.empty() ? (std::uint64_t{1} << 62) : primes.back().p - 4;
        primes.push_back(next_prime_below(start));
    }
    return primes[k];
}

std::optional<std::uint64_t> reduce(const GaussianRational& x, const Prime& pr, bool conjugate) {
    auto re = reduce_rational(x.re(), pr.p);
    if (!re) return std::nullopt;
    if (x.is_real()) return re;
    auto im = reduce_rational(x.im(), pr.p);
    if (!im) return std::nullopt;
    std::uint64_t s = conjugate ? pr.p - pr.sqrt_minus_one : pr.sqrt_minus_one;
    return add_mod(*re, mul_mod(*im, s, pr.p), pr.p);
}

std::optional<std::vector<std::uint64_t>> image(const Matrix& m, const Prime& pr, bool conjugate) {
    std::vector<std::uint64_t> out(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& x = m(r, c);
            if (x.is_zero()) continue;
            auto v = reduce(x, pr, conjugate);
            if (!v) return std::nullopt;
            out[r * m.cols() + c] = *v;
        }
    return out;
}

ModEchelon row_reduce_mod(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    std::vector<std::size_t> nz;
    for (std::size_t col = 0; col < cols && cur < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t r = cur; r < rows; ++r)
            if (a[r * cols + col]) {
                found = r;
                break;
            }
        if (found == rows) continue;
        if (found != cur)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(found * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((found + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(cur * cols));
        std::uint64_t* prow = a.data() + cur * cols;
        const std::uint64_t inv = inv_mod(prow[col], p);
        nz.clear();
        for (std::size_t c = col; c < cols; ++c)
            if (prow[c]) {
                prow[c] = mul_mod(prow[c], inv, p);
                nz.push_back(c);
            }
        const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
        for (long long rr = 0; rr < nrows; ++rr) {
            const auto r = static_cast<std::size_t>(rr);
            std::uint64_t* row = a.data() + r * cols;
            if (r == cur || row[col] == 0) continue;
            const std::uint64_t f = row[col];
            for (std::size_t c : nz) row[c] = sub_mod(row[c], mul_mod(f, prow[c], p), p);
        }
        pivots.push_back(col);
        ++cur;
    }
    return {rows, cols, std::move(a), std::move(pivots)};
}

ModEchelon row_reduce_mod_serial(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                                 std::uint64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    for (std::size_t col = 0; col < cols && cur < rows; ++col) {
        std::size_t found = cur;
        while (found < rows && a[found * cols + col] == 0) ++found;
        if (found == rows) continue;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a[found * cols + c], a[cur * cols + c]);
        const std::uint64_t inv = inv_mod(a[cur * cols + col], p);
        for (std::size_t c = 0; c < cols; ++c) a[cur * cols + c] = mul_mod(a[cur * cols + c], inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == cur) continue;
            const std::uint64_t f = a[r * cols + col];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols; ++c)
                a[r * cols + c] = sub_mod(a[r * cols + c], mul_mod(f, a[cur * cols + c], p), p);
        }
        pivots.push_back(col);
        ++cur;
    }
    return {rows, cols, std::move(a), std::move(pivots)};
}

std::optional<Rational> rational_reconstruct(const BigInt& a, const BigInt& modulus) {
    BigInt bound;
    BigInt half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    BigInt r0 = modulus, r1 = a % modulus;
    if (r1 < 0) r1 += modulus;
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

namespace {

// x = a (mod m), x = b (mod p)  ->  x mod m*p
void crt_combine(BigInt& x, const BigInt& m, std::uint64_t b, std::uint64_t p) {
    std::uint64_t xm = reduce_integer(x, p);
    std::uint64_t mm = reduce_integer(m, p);
    std::uint64_t t = mul_mod(sub_mod(b, xm, p), inv_mod(mm, p), p);
    x += m * BigInt(static_cast<unsigned long>(t));
}

bool verify_kernel(const Matrix& m, const std::vector<Vector>& kernel) {
    bool ok = true;
    const long long nk = static_cast<long long>(kernel.size());
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (long long k = 0; k < nk; ++k) {
        const Vector& v = kernel[static_cast<std::size_t>(k)];
        for (std::size_t r = 0; r < m.rows() && ok; ++r) {
            GaussianRational acc;
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(r, c).is_zero() && !v[c].is_zero()) acc += m(r, c) * v[c];
            if (!acc.is_zero()) ok = false;
        }
    }
    return ok;
}

CertifiedRank exact_fallback(const Matrix& m) {
    Echelon e = row_reduce(m);
    return {e.rank(), kernel_basis(e), false};
}

}  // namespace

CertifiedRank certified_rank(const Matrix& m, std::size_t max_primes) {
    const std::size_t cols = m.cols();
    if (m.rows() == 0 || cols == 0) return exact_fallback(m);

    std::optional<std::size_t> best_rank;
    std::vector<std::size_t> best_pivots;
    std::vector<std::size_t> free_cols;
    // Residues of the real and imaginary parts of each kernel entry, indexed
    // [free column][pivot row].
    std::vector<std::vector<BigInt>> re_acc, im_acc;
    BigInt modulus;

    for (std::size_t k = 0; k < max_primes; ++k) {
        const Prime& pr = prime(k);
        auto direct = image(m, pr, false);
        auto conj = image(m, pr, true);
        if (!direct || !conj) continue;
        ModEchelon ed = row_reduce_mod(std::move(*direct), m.rows(), cols, pr.p);
        if (ed.rank() == cols) return {cols, {}, true};
        ModEchelon ec = row_reduce_mod(std::move(*conj), m.rows(), cols, pr.p);
        if (ec.pivots != ed.pivots) continue;

        bool better = !best_rank || ed.rank() > *best_rank ||
                      (ed.rank() == *best_rank && ed.pivots < best_pivots);
        bool same = best_rank && ed.rank() == *best_rank && ed.pivots == best_pivots;
        if (!better && !same) continue;
        if (better) {
            best_rank = ed.rank();
            best_pivots = ed.pivots;
            free_cols.clear();
            for (std::size_t c = 0, q = 0; c < cols; ++c) {
                if (q < best_pivots.size() && best_pivots[q] == c) {
                    ++q;
                } else {
                    free_cols.push_back(c);
                }
            }
            re_acc.assign(free_cols.size(), std::vector<BigInt>(best_pivots.size()));
            im_acc.assign(free_cols.size(), std::vector<BigInt>(best_pivots.size()));
            modulus = 1;
        }

        const std::uint64_t p = pr.p;
        const std::uint64_t inv2 = inv_mod(2, p);
        const std::uint64_t inv2s = inv_mod(mul_mod(2, pr.sqrt_minus_one, p), p);
        for (std::size_t f = 0; f < free_cols.size(); ++f)
            for (std::size_t r = 0; r < best_pivots.size(); ++r) {
                std::uint64_t a = sub_mod(0, ed.at(r, free_cols[f]), p);
                std::uint64_t b = sub_mod(0, ec.at(r, free_cols[f]), p);
                std::uint64_t re = mul_mod(add_mod(a, b, p), inv2, p);
                std::uint64_t im = mul_mod(sub_mod(a, b, p), inv2s, p);
                if (modulus == 1) {
                    re_acc[f][r] = static_cast<unsigned long>(re);
                    im_acc[f][r] = static_cast<unsigned long>(im);
                } else {
                    crt_combine(re_acc[f][r], modulus, re, p);
                    crt_combine(im_acc[f][r], modulus, im, p);
                }
            }
        modulus *= BigInt(static_cast<unsigned long>(p));

        std::vector<Vector> kernel;
        bool reconstructed = true;
        for (std::size_t f = 0; f < free_cols.size() && reconstructed; ++f) {
            Vector v(cols);
            v[free_cols[f]] = 1;
            for (std::size_t r = 0; r < best_pivots.size(); ++r) {
                auto re = rational_reconstruct(re_acc[f][r], modulus);
                auto im = rational_reconstruct(im_acc[f][r], modulus);
                if (!re || !im) {
                    reconstructed = false;
                    break;
                }
                v[best_pivots[r]] = GaussianRational(*re, *im);
            }
            kernel.push_back(std::move(v));
        }
        if (reconstructed && verify_kernel(m, kernel)) return {*best_rank, std::move(kernel), true};
    }
    return exact_fallback(m);
}

bool has_full_column_rank(const Matrix& m) {
    if (m.rows() < m.cols()) return false;
    for (std::size_t k = 0; k < 2; ++k) {
        auto img = image(m, prime(k), false);
        if (!img) continue;
        if (row_reduce_mod(std::move(*img), m.rows(), m.cols(), prime(k).p).rank() == m.cols()) return true;
    }
    return certified_rank(m).rank == m.cols();
}

}  // namespace qk3::modular
