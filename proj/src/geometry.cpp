#include "qk3/geometry.hpp"

#include "qk3/linalg.hpp"
#include "qk3/modular.hpp"
#include "qk3/univariate.hpp"

#include <stdexcept>

namespace qk3 {

Matrix macaulay_matrix(std::span<const HomPoly> gens, int degree) {
    if (gens.empty()) throw std::invalid_argument("macaulay_matrix needs generators");
    const int nvars = gens.front().nvars();
    std::vector<std::size_t> offsets;
    std::size_t rows = 0;
    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw std::invalid_argument("generators in different rings");
        offsets.push_back(rows);
        if (g.degree() <= degree) rows += monomial_count(nvars, degree - g.degree());
    }
    Matrix m(rows, monomial_count(nvars, degree));
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const HomPoly& g = gens[gi];
        if (g.degree() > degree) continue;
        const auto& mults = monomials(nvars, degree - g.degree());
        const long count = static_cast<long>(mults.size());
#pragma omp parallel for schedule(static)
        for (long r = 0; r < count; ++r) {
            const Exponent& mono = mults[static_cast<std::size_t>(r)];
            for (const auto& [e, c] : g.terms()) {
                Exponent sum{};
                for (int k = 0; k < 4; ++k) sum[k] = static_cast<std::uint8_t>(e[k] + mono[k]);
                m(offsets[gi] + static_cast<std::size_t>(r), monomial_index(nvars, sum)) = c;
            }
        }
    }
    return m;
}

bool smooth_at_degree(const HomPoly& f, int degree) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial defines no hypersurface");
    const auto parts = partials(f);
    return modular::has_full_column_rank(macaulay_matrix(parts, degree));
}

bool is_smooth_hypersurface(const HomPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("smoothness test needs degree >= 2");
    return smooth_at_degree(f, f.nvars() * (f.degree() - 2) + 1);
}

bool is_smooth_surface(const HomPoly& f) {
    if (f.nvars() != 4 || f.degree() != 4) throw std::invalid_argument("expected a quartic in 4 variables");
    return is_smooth_hypersurface(f);
}

bool is_smooth_plane_quartic(const HomPoly& f) {
    if (f.nvars() != 3 || f.degree() != 4) throw std::invalid_argument("expected a quartic in 3 variables");
    return is_smooth_hypersurface(f);
}

const std::vector<GaussianRational>& fourth_roots_of_unity() {
    static const std::vector<GaussianRational> roots{GaussianRational(1), GaussianRational(-1),
                                                     GaussianRational::i(), -GaussianRational::i()};
    return roots;
}

EigenDecomposition eigen_decompose_order4(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("expected a 4x4 matrix");
    if (m.power(4) != Matrix::identity(4))
        throw std::invalid_argument("unnormalized automorphism: M^4 != I; rescale M by a scalar first");
    EigenDecomposition out;
    for (const auto& mu : fourth_roots_of_unity()) {
        Matrix shifted = m;
        for (std::size_t k = 0; k < 4; ++k) shifted(k, k) -= mu;
        auto basis = kernel_basis(shifted);
        if (!basis.empty()) out.spaces.push_back({mu, std::move(basis)});
    }
    return out;
}

const char* to_string(CurveSection::Kind kind) {
    switch (kind) {
        case CurveSection::Kind::point: return "point";
        case CurveSection::Kind::finite_points: return "finite-points";
        case CurveSection::Kind::line_in_surface: return "line-in-surface";
        case CurveSection::Kind::plane_quartic: return "plane-quartic";
    }
    return "?";
}

CurveSection section(const HomPoly& f, std::span<const Vector> basis) {
    if (basis.empty()) throw std::invalid_argument("section needs a nonempty subspace");
    const std::size_t n = static_cast<std::size_t>(f.nvars());
    if (basis.size() >= n) throw std::invalid_argument("section of the whole space");
    Matrix a(n, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        if (basis[c].size() != n) throw std::invalid_argument("basis vector has wrong length");
        for (std::size_t r = 0; r < n; ++r) a(r, c) = basis[c][r];
    }
    if (rank(a) != basis.size()) throw std::invalid_argument("section basis is linearly dependent");

    CurveSection s;
    s.ambient.assign(basis.begin(), basis.end());
    s.form = substitute_linear(f, a);
    switch (basis.size()) {
        case 1:
            s.kind = CurveSection::Kind::point;
            s.point_count = s.form.is_zero() ? 1 : 0;
            break;
        case 2:
            if (s.form.is_zero()) {
                s.kind = CurveSection::Kind::line_in_surface;
                s.genus = 0;
            } else {
                s.kind = CurveSection::Kind::finite_points;
                s.point_count = static_cast<int>(squarefree_profile(s.form).size());
            }
            break;
        default:
            if (s.form.is_zero()) throw std::invalid_argument("plane contained in the surface");
            s.kind = CurveSection::Kind::plane_quartic;
            s.smooth = is_smooth_hypersurface(s.form);
            if (s.smooth) s.genus = (f.degree() - 1) * (f.degree() - 2) / 2;
            break;
    }
    return s;
}

}  // namespace qk3
