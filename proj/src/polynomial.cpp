#include "qk3/polynomial.hpp"

#include <cctype>
#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace qk3 {

namespace {

constexpr std::string_view kNames = "XYZW";

void check_nvars(int nvars) {
    if (nvars < 1 || nvars > 4) throw std::invalid_argument("polynomials use 1 to 4 variables");
}

int exponent_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

void generate(int nvars, int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (var == nvars - 1) {
        cur[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
        out.push_back(cur);
        cur[static_cast<std::size_t>(var)] = 0;
        return;
    }
    for (int a = remaining; a >= 0; --a) {
        cur[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(a);
        generate(nvars, var + 1, remaining - a, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

char variable_name(int nvars, int index) {
    check_nvars(nvars);
    return kNames[static_cast<std::size_t>(4 - nvars + index)];
}

const std::vector<Exponent>& monomials(int nvars, int degree) {
    check_nvars(nvars);
    if (degree < 0) throw std::invalid_argument("negative degree");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Exponent>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({nvars, degree});
    if (inserted) {
        Exponent cur{};
        generate(nvars, 0, degree, cur, it->second);
    }
    return it->second;
}

std::size_t monomial_count(int nvars, int degree) {
    return binomial(static_cast<std::size_t>(degree + nvars - 1), static_cast<std::size_t>(nvars - 1));
}

std::size_t monomial_index(int nvars, const Exponent& e) {
    std::size_t index = 0;
    int remaining = exponent_degree(e);
    for (int v = 0; v < nvars - 1; ++v) {
        const int ev = e[static_cast<std::size_t>(v)];
        // monomials with a larger exponent in this variable come first
        for (int a = remaining; a > ev; --a) index += monomial_count(nvars - 1 - v, remaining - a);
        remaining -= ev;
    }
    return index;
}

HomPoly::HomPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    check_nvars(nvars);
    if (degree < 0) throw std::invalid_argument("negative degree");
}

HomPoly HomPoly::variable(int nvars, int index, GaussianRational c) {
    HomPoly p(nvars, 1);
    Exponent e{};
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, c);
    return p;
}

HomPoly HomPoly::constant(int nvars, GaussianRational c) {
    HomPoly p(nvars, 0);
    p.add_term(Exponent{}, c);
    return p;
}

HomPoly HomPoly::monomial(int nvars, const Exponent& e, GaussianRational c) {
    HomPoly p(nvars, exponent_degree(e));
    p.add_term(e, c);
    return p;
}

HomPoly HomPoly::linear_form(std::span<const GaussianRational> coeffs) {
    HomPoly p(static_cast<int>(coeffs.size()), 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Exponent e{};
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

GaussianRational HomPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

Vector HomPoly::dense_coefficients() const {
    Vector out(monomial_count(nvars_, degree_));
    for (const auto& [e, c] : terms_) out[monomial_index(nvars_, e)] = c;
    return out;
}

HomPoly HomPoly::from_dense(int nvars, int degree, std::span<const GaussianRational> coeffs) {
    const auto& mons = monomials(nvars, degree);
    if (coeffs.size() != mons.size()) throw std::invalid_argument("dense coefficient count mismatch");
    HomPoly p(nvars, degree);
    for (std::size_t k = 0; k < mons.size(); ++k)
        if (!coeffs[k].is_zero()) p.terms_.emplace(mons[k], coeffs[k]);
    return p;
}

void HomPoly::add_term(const Exponent& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (exponent_degree(e) != degree_) throw std::invalid_argument("term degree differs from polynomial degree");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (o.is_zero()) return *this;
    if (nvars_ != o.nvars_ || (degree_ != o.degree_ && !is_zero()))
        throw std::invalid_argument("adding polynomials of different shape");
    degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (o.is_zero()) return *this;
    if (nvars_ != o.nvars_ || (degree_ != o.degree_ && !is_zero()))
        throw std::invalid_argument("subtracting polynomials of different shape");
    degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HomPoly& HomPoly::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

HomPoly HomPoly::operator-() const {
    HomPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("multiplying polynomials in different rings");
    HomPoly out(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{};
            for (std::size_t k = 0; k < 4; ++k) {
                int s = ea[k] + eb[k];
                if (s > 255) throw std::overflow_error("exponent overflow");
                e[k] = static_cast<std::uint8_t>(s);
            }
            out.add_term(e, ca * cb);
        }
    return out;
}

HomPoly HomPoly::pow(unsigned k) const {
    HomPoly result = constant(nvars_, 1);
    for (unsigned j = 0; j < k; ++j) result = result * *this;
    return result;
}

GaussianRational HomPoly::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("evaluation point dimension");
    std::vector<std::vector<GaussianRational>> powers(static_cast<std::size_t>(nvars_));
    for (std::size_t v = 0; v < point.size(); ++v) {
        powers[v].push_back(GaussianRational(1));
        for (int k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * point[v]);
    }
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t v = 0; v < point.size(); ++v)
            if (e[v]) t *= powers[v][e[v]];
        acc += t;
    }
    return acc;
}

HomPoly HomPoly::partial(int index) const {
    if (degree_ == 0) return HomPoly(nvars_, 0);
    HomPoly out(nvars_, degree_ - 1);
    const auto v = static_cast<std::size_t>(index);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent d = e;
        --d[v];
        out.add_term(d, c * GaussianRational(static_cast<long>(e[v])));
    }
    return out;
}

bool HomPoly::involves(int index) const {
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(index)]) return true;
    return false;
}

HomPoly HomPoly::select_variables(std::span<const int> vars) const {
    HomPoly out(static_cast<int>(vars.size()), degree_);
    for (const auto& [e, c] : terms_) {
        Exponent n{};
        int kept = 0;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            n[k] = e[static_cast<std::size_t>(vars[k])];
            kept += n[k];
        }
        if (kept != degree_) throw std::invalid_argument("polynomial involves a dropped variable");
        out.add_term(n, c);
    }
    return out;
}

HomPoly HomPoly::embed(int nvars, std::span<const int> targets) const {
    if (targets.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("embed target count");
    HomPoly out(nvars, degree_);
    for (const auto& [e, c] : terms_) {
        Exponent n{};
        for (std::size_t k = 0; k < targets.size(); ++k) n[static_cast<std::size_t>(targets[k])] = e[k];
        out.add_term(n, c);
    }
    return out;
}

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            const int a = e[static_cast<std::size_t>(v)];
            if (!a) continue;
            if (!mono.empty()) mono += '*';
            mono += variable_name(nvars_, v);
            if (a > 1) mono += "^" + std::to_string(a);
        }
        if (!c.is_real()) {
            if (!first) s += '+';
            s += "(" + c.to_string() + ")";
            if (!mono.empty()) s += "*" + mono;
        } else {
            const Rational& q = c.re();
            if (sgn(q) < 0) {
                s += '-';
            } else if (!first) {
                s += '+';
            }
            Rational mag = abs(q);
            if (mono.empty()) {
                s += rational_to_string(mag);
            } else if (mag == 1) {
                s += mono;
            } else {
                s += rational_to_string(mag) + "*" + mono;
            }
        }
        first = false;
    }
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int nvars) : s_(text), nvars_(nvars) {}

    HomPoly parse(int expected_degree) {
        HomPoly out(nvars_, expected_degree);
        std::optional<int> degree;
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) {
                if (first) throw ParseError("empty polynomial", pos_);
                break;
            }
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            skip_ws();
            const std::size_t term_start = pos_;
            auto [coeff, e] = term();
            const int d = exponent_degree(e);
            if (!degree) {
                degree = d;
            } else if (*degree != d) {
                throw ParseError("inhomogeneous polynomial: term of degree " + std::to_string(d) +
                                     " after terms of degree " + std::to_string(*degree),
                                 term_start);
            }
            if (d != expected_degree)
                throw ParseError("degree mismatch: expected " + std::to_string(expected_degree) + ", found " +
                                     std::to_string(d),
                                 term_start);
            if (sign < 0) coeff = -coeff;
            out.add_term(e, coeff);
            first = false;
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_factor_start() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == '(' || var_index(c) >= 0;
    }

    int var_index(char c) const {
        for (int v = 0; v < nvars_; ++v)
            if (variable_name(nvars_, v) == c) return v;
        return -1;
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", start);
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    std::pair<GaussianRational, Exponent> term() {
        GaussianRational coeff(1);
        Exponent e{};
        if (!at_factor_start()) throw ParseError("expected a term", pos_);
        bool need_factor = true;
        while (need_factor || at_factor_start()) {
            skip_ws();
            if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
            const char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                BigInt num = integer();
                BigInt den(1);
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '/') {
                    ++pos_;
                    skip_ws();
                    const std::size_t at = pos_;
                    den = integer();
                    if (den == 0) throw ParseError("zero denominator", at);
                }
                Rational q(num, den);
                q.canonicalize();
                coeff *= GaussianRational(q);
            } else if (c == 'i') {
                ++pos_;
                coeff *= GaussianRational::i();
            } else if (c == '(') {
                const std::size_t open = pos_;
                const std::size_t close = s_.find(')', open);
                if (close == std::string_view::npos) throw ParseError("unbalanced '('", open);
                try {
                    coeff *= GaussianRational::parse(s_.substr(open + 1, close - open - 1));
                } catch (const ParseError& err) {
                    throw ParseError("bad coefficient", open + 1 + err.position());
                }
                pos_ = close + 1;
            } else if (int v = var_index(c); v >= 0) {
                ++pos_;
                long power = 1;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip_ws();
                    const std::size_t at = pos_;
                    BigInt p = integer();
                    if (p > 255) throw ParseError("exponent too large", at);
                    power = p.get_si();
                }
                const int total = e[static_cast<std::size_t>(v)] + static_cast<int>(power);
                if (total > 255) throw ParseError("exponent too large", pos_);
                e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(total);
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", pos_);
            }
            need_factor = false;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                need_factor = true;
            }
        }
        return {coeff, e};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int nvars_;
};

}  // namespace

HomPoly parse_polynomial(std::string_view text, int expected_degree, int nvars) {
    check_nvars(nvars);
    return PolyParser(text, nvars).parse(expected_degree);
}

HomPoly substitute_linear(const HomPoly& f, const Matrix& m) {
    if (m.rows() != static_cast<std::size_t>(f.nvars()))
        throw std::invalid_argument("substitution matrix must have one row per variable");
    const int k = static_cast<int>(m.cols());
    std::vector<std::vector<HomPoly>> powers;
    for (std::size_t j = 0; j < m.rows(); ++j) {
        auto row = m.row(j);
        HomPoly lin = HomPoly::linear_form(row);
        std::vector<HomPoly> pj{HomPoly::constant(k, 1)};
        for (int a = 1; a <= f.degree(); ++a) pj.push_back(pj.back() * lin);
        powers.push_back(std::move(pj));
    }
    HomPoly out(k, f.degree());
    for (const auto& [e, c] : f.terms()) {
        HomPoly t = HomPoly::constant(k, c);
        for (std::size_t j = 0; j < m.rows(); ++j)
            if (e[j]) t = t * powers[j][e[j]];
        out += t;
    }
    return out;
}

std::vector<HomPoly> partials(const HomPoly& f) {
    std::vector<HomPoly> out;
    for (int v = 0; v < f.nvars(); ++v) out.push_back(f.partial(v));
    return out;
}

HomPoly XDecomposition::reassemble() const {
    HomPoly out(4, 4);
    for (int k = 0; k <= 4; ++k) {
        Exponent e{};
        e[static_cast<std::size_t>(chart)] = static_cast<std::uint8_t>(4 - k);
        out += c[static_cast<std::size_t>(k)] * HomPoly::monomial(4, e);
    }
    return out;
}

XDecomposition x_decompose(const HomPoly& f, int chart) {
    if (f.nvars() != 4 || f.degree() != 4) throw std::invalid_argument("x_decompose needs a quartic in 4 variables");
    if (chart < 0 || chart > 3) throw std::invalid_argument("chart index out of range");
    XDecomposition d;
    d.chart = chart;
    for (const auto& [e, c] : f.terms()) {
        const int k = 4 - e[static_cast<std::size_t>(chart)];
        Exponent rest = e;
        rest[static_cast<std::size_t>(chart)] = 0;
        d.c[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return d;
}

ProjPoint::ProjPoint(Vector coords) : coords_(std::move(coords)) {
    std::size_t k = 0;
    while (k < coords_.size() && coords_[k].is_zero()) ++k;
    if (k == coords_.size()) throw std::invalid_argument("projective point with all coordinates zero");
    lead_ = k;
    const GaussianRational inv = coords_[k].inverse();
    for (auto& x : coords_) x *= inv;
}

ProjPoint ProjPoint::coordinate(int index, int dim) {
    Vector v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(index)] = 1;
    return ProjPoint(std::move(v));
}

ProjPoint ProjPoint::parse(std::string_view text) {
    Vector v;
    std::size_t start = 0;
    for (;;) {
        const std::size_t colon = text.find(':', start);
        const std::string_view part = text.substr(start, colon == std::string_view::npos ? text.npos : colon - start);
        try {
            v.push_back(GaussianRational::parse(part));
        } catch (const ParseError& e) {
            throw ParseError("bad point coordinate", start + e.position());
        }
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    bool all_zero = true;
    for (const auto& x : v) all_zero = all_zero && x.is_zero();
    if (all_zero) throw ParseError("point has all coordinates zero", 0);
    return ProjPoint(std::move(v));
}

std::string ProjPoint::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (k) s += ':';
        s += coords_[k].to_string();
    }
    return s;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.lead_ != b.lead_) return a.lead_ < b.lead_;
    for (std::size_t k = 0; k < std::min(a.coords_.size(), b.coords_.size()); ++k) {
        const auto& x = a.coords_[k];
        const auto& y = b.coords_[k];
        if (x.re() != y.re()) return x.re() < y.re();
        if (x.im() != y.im()) return x.im() < y.im();
    }
    return a.coords_.size() < b.coords_.size();
}

std::array<HomPoly, 5> polar_forms(const HomPoly& f, const ProjPoint& p) {
    if (f.nvars() != 4 || f.degree() != 4) throw std::invalid_argument("polar forms need a quartic in 4 variables");
    std::array<HomPoly, 5> e{HomPoly(4, 0), HomPoly(4, 1), HomPoly(4, 2), HomPoly(4, 3), HomPoly(4, 4)};
    const Vector& pc = p.coords();
    for (const auto& [a, c] : f.terms()) {
        // choose b_j <= a_j copies of Q_j from each factor (s P_j + t Q_j)^{a_j}
        Exponent b{};
        for (;;) {
            GaussianRational coeff = c;
            for (std::size_t j = 0; j < 4; ++j) {
                coeff *= GaussianRational(static_cast<long>(binomial(a[j], b[j])));
                if (a[j] > b[j]) coeff *= pow(pc[j], static_cast<unsigned>(a[j] - b[j]));
            }
            const int k = exponent_degree(b);
            e[static_cast<std::size_t>(k)].add_term(b, coeff);
            std::size_t j = 0;
            while (j < 4 && b[j] == a[j]) b[j++] = 0;
            if (j == 4) break;
            ++b[j];
        }
    }
    return e;
}

}  // namespace qk3
