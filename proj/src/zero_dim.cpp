#include "qk3/zero_dim.hpp"

#include "qk3/geometry.hpp"
#include "qk3/linalg.hpp"
#include "qk3/modular.hpp"
#include "qk3/univariate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace qk3 {

namespace {

// Replaces the generators of each degree by an echelon basis of their span.
std::vector<HomPoly> independent_generators(std::span<const HomPoly> gens) {
    std::map<int, std::vector<const HomPoly*>> by_degree;
    for (const auto& g : gens)
        if (!g.is_zero()) by_degree[g.degree()].push_back(&g);
    std::vector<HomPoly> out;
    for (const auto& [deg, list] : by_degree) {
        const int nvars = list.front()->nvars();
        Matrix m(list.size(), monomial_count(nvars, deg));
        for (std::size_t r = 0; r < list.size(); ++r) {
            auto dense = list[r]->dense_coefficients();
            for (std::size_t c = 0; c < dense.size(); ++c) m(r, c) = dense[c];
        }
        Echelon e = row_reduce(std::move(m));
        for (std::size_t r = 0; r < e.rank(); ++r) {
            auto row = e.rref.row(r);
            out.push_back(HomPoly::from_dense(nvars, deg, row));
        }
    }
    return out;
}

// Normal forms of degree-d monomials modulo I_d, in the basis of standard
// (non-pivot) monomials.
class Quotient {
public:
    Quotient(std::span<const HomPoly> gens, int nvars, int degree) : nvars_(nvars), degree_(degree) {
        const std::size_t cols = monomial_count(nvars, degree);
        echelon_ = row_reduce(macaulay_matrix(gens, degree));
        standard_ = echelon_.free_columns();
        row_of_.assign(cols, -1);
        for (std::size_t r = 0; r < echelon_.pivots.size(); ++r) row_of_[echelon_.pivots[r]] = static_cast<long>(r);
    }

    std::size_t dim() const { return standard_.size(); }
    const std::vector<std::size_t>& standard() const { return standard_; }

    Vector normal_form(const Exponent& e) const {
        const std::size_t col = monomial_index(nvars_, e);
        Vector v(standard_.size());
        if (row_of_[col] < 0) {
            v[static_cast<std::size_t>(std::find(standard_.begin(), standard_.end(), col) - standard_.begin())] = 1;
            return v;
        }
        const std::size_t r = static_cast<std::size_t>(row_of_[col]);
        for (std::size_t k = 0; k < standard_.size(); ++k) v[k] = -echelon_.rref(r, standard_[k]);
        return v;
    }

    int degree() const { return degree_; }

private:
    int nvars_;
    int degree_;
    Echelon echelon_;
    std::vector<std::size_t> standard_;
    std::vector<long> row_of_;
};

bool vanishes(std::span<const HomPoly> gens, const ProjPoint& p) {
    return std::all_of(gens.begin(), gens.end(), [&](const HomPoly& g) { return g.evaluate(p.coords()).is_zero(); });
}

}  // namespace

std::size_t hilbert_function(std::span<const HomPoly> gens, int degree) {
    if (gens.empty()) throw std::invalid_argument("hilbert_function needs generators");
    const int nvars = gens.front().nvars();
    const std::size_t cols = monomial_count(nvars, degree);
    std::vector<HomPoly> usable;
    for (const auto& g : gens)
        if (!g.is_zero() && g.degree() <= degree) usable.push_back(g);
    if (usable.empty()) return cols;
    return cols - modular::certified_rank(macaulay_matrix(usable, degree)).rank;
}

ZeroDimResult solve_zero_dimensional(std::span<const HomPoly> input, const ZeroDimLimits& limits) {
    if (input.empty()) throw std::invalid_argument("solve_zero_dimensional needs generators");
    const int nvars = input.front().nvars();
    const std::vector<HomPoly> gens = independent_generators(input);
    ZeroDimResult result;
    if (gens.empty()) {
        result.detail = "all generators vanish";
        return result;
    }
    int top = 0;
    for (const auto& g : gens) top = std::max(top, g.degree());

    // Hilbert function constant at d and d+1 with d >= its value: by Gotzmann
    // persistence it stays constant, and that constant is the scheme degree.
    std::size_t hf = hilbert_function(gens, top);
    int d = top;
    for (; d + 1 <= limits.max_degree; ++d) {
        const std::size_t next = hilbert_function(gens, d + 1);
        if (next == hf && static_cast<std::size_t>(d) >= hf) break;
        hf = next;
    }
    if (d + 1 > limits.max_degree) {
        result.degree_used = limits.max_degree;
        result.detail = "Hilbert function not stable below degree " + std::to_string(limits.max_degree);
        return result;
    }
    result.scheme_degree = hf;
    result.degree_used = d;
    const std::size_t n = hf;
    if (n == 0) {
        result.complete = true;
        result.detail = "empty zero set";
        return result;
    }

    const Quotient qd(gens, nvars, d), qd1(gens, nvars, d + 1);
    if (qd.dim() != n || qd1.dim() != n) throw std::logic_error("quotient dimension disagrees with Hilbert function");

    // X_j : R_d -> R_{d+1}
    std::vector<Matrix> mult(static_cast<std::size_t>(nvars), Matrix(n, n));
    const auto& mons = monomials(nvars, d);
    for (int j = 0; j < nvars; ++j)
        for (std::size_t b = 0; b < n; ++b) {
            Exponent e = mons[qd.standard()[b]];
            ++e[static_cast<std::size_t>(j)];
            const Vector v = qd1.normal_form(e);
            for (std::size_t r = 0; r < n; ++r) mult[static_cast<std::size_t>(j)](r, b) = v[r];
        }

    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<long> small(-7, 7);
    std::vector<ProjPoint> best;
    for (int attempt = 0; attempt < limits.attempts; ++attempt) {
        Matrix h(n, n), mg(n, n);
        std::vector<long> hc(static_cast<std::size_t>(nvars)), gc(static_cast<std::size_t>(nvars));
        for (auto& x : hc) x = small(rng);
        for (auto& x : gc) x = small(rng);
        for (int j = 0; j < nvars; ++j) h = h + GaussianRational(hc[static_cast<std::size_t>(j)]) * mult[static_cast<std::size_t>(j)];
        if (rank(h) < n) continue;
        const Matrix hinv = inverse(h);
        std::vector<Matrix> mj;
        for (const auto& x : mult) mj.push_back(hinv * x);
        for (int j = 0; j < nvars; ++j) mg = mg + GaussianRational(gc[static_cast<std::size_t>(j)]) * mj[static_cast<std::size_t>(j)];

        const UPoly cp = characteristic_polynomial(mg);
        const bool separating = divmod(cp, gcd(cp, cp.derivative())).first.degree() == static_cast<int>(n);
        std::vector<ProjPoint> found;
        for (const auto& mu : gaussian_rational_roots(cp)) {
            Matrix shifted = mg;
            for (std::size_t k = 0; k < n; ++k) shifted(k, k) -= mu;
            const auto left = kernel_basis(shifted.transpose());
            if (left.size() != 1) continue;
            const Vector& w = left.front();
            std::size_t t = 0;
            while (w[t].is_zero()) ++t;
            Vector coords;
            bool joint = true;
            for (const auto& m : mj) {
                const Vector wm = m.transpose() * w;
                const GaussianRational lambda = wm[t] / w[t];
                for (std::size_t k = 0; k < n && joint; ++k) joint = wm[k] == lambda * w[k];
                coords.push_back(lambda);
            }
            if (!joint) continue;
            ProjPoint p(std::move(coords));
            if (vanishes(gens, p) && std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
        }
        if (found.size() > best.size()) best = found;
        if (best.size() == n || separating) break;
    }
    std::sort(best.begin(), best.end());
    result.points = std::move(best);
    result.complete = result.points.size() == n;
    result.detail = std::to_string(result.points.size()) + " of " + std::to_string(n) +
                    " zeros (with multiplicity) found over Q(i)";
    return result;
}

}  // namespace qk3
