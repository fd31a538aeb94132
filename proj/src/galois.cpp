#include "qk3/galois.hpp"

#include "qk3/geometry.hpp"
#include "qk3/linalg.hpp"

#include <algorithm>
#include <array>

namespace qk3 {

SmoothQuartic::SmoothQuartic(HomPoly f) : f_(std::move(f)) {
    if (f_.nvars() != 4 || f_.degree() != 4) throw std::invalid_argument("expected a quartic in X,Y,Z,W");
    if (f_.is_zero() || !is_smooth_surface(f_)) throw SingularSurfaceError("singular surface refused");
}

LinearAuto LinearAuto::for_surface(const HomPoly& f, Matrix m) {
    if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("expected a 4x4 matrix");
    if (m.power(4) != Matrix::identity(4))
        throw std::invalid_argument("unnormalized automorphism: M^4 != I; rescale M by a scalar first");
    const HomPoly g = substitute_linear(f, m);
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("matrix does not preserve the surface");
    const auto& [e, c] = *f.terms().begin();
    GaussianRational lambda = g.coefficient(e) / c;
    if (g != lambda * f) throw std::invalid_argument("matrix does not preserve the surface");
    return {std::move(m), std::move(lambda)};
}

std::vector<HomPoly> galois_conditions(const HomPoly& f) {
    if (f.nvars() != 4 || f.degree() != 4) throw std::invalid_argument("expected a quartic in 4 variables");
    // entry(k, m): coefficient of quadric monomial m in sum_j P_j d_j d_k F,
    // a linear form in P.
    const std::size_t nq = monomial_count(4, 2);
    std::vector<std::vector<Vector>> lin(4, std::vector<Vector>(nq, Vector(4)));
    for (int j = 0; j < 4; ++j) {
        const HomPoly dj = f.partial(j);
        for (int k = 0; k < 4; ++k) {
            const Vector dense = dj.partial(k).dense_coefficients();
            for (std::size_t m = 0; m < nq; ++m) lin[static_cast<std::size_t>(k)][m][static_cast<std::size_t>(j)] = dense[m];
        }
    }
    std::vector<std::vector<HomPoly>> entry(4);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t m = 0; m < nq; ++m) entry[k].push_back(HomPoly::linear_form(lin[k][m]));
    std::vector<HomPoly> minors;
    for (std::size_t k1 = 0; k1 < 4; ++k1)
        for (std::size_t k2 = k1 + 1; k2 < 4; ++k2)
            for (std::size_t m1 = 0; m1 < nq; ++m1)
                for (std::size_t m2 = m1 + 1; m2 < nq; ++m2) {
                    HomPoly q = entry[k1][m1] * entry[k2][m2] - entry[k1][m2] * entry[k2][m1];
                    if (!q.is_zero()) minors.push_back(std::move(q));
                }
    return minors;
}

namespace {

Matrix completion_matrix(const ProjPoint& p, std::span<const Vector> completion) {
    if (p.dim() != 4) throw std::invalid_argument("expected a point of P^3");
    if (completion.size() != 3) throw std::invalid_argument("basis completion needs three vectors");
    Matrix a(4, 4);
    for (std::size_t r = 0; r < 4; ++r) a(r, 0) = p.coords()[r];
    for (std::size_t c = 0; c < 3; ++c) {
        if (completion[c].size() != 4) throw std::invalid_argument("completion vector has wrong length");
        for (std::size_t r = 0; r < 4; ++r) a(r, c + 1) = completion[c][r];
    }
    if (rank(a) != 4) throw std::invalid_argument("completion does not span");
    return a;
}

std::vector<Vector> standard_completion(const ProjPoint& p) {
    std::vector<Vector> out;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k == p.leading_index()) continue;
        Vector e(4);
        e[k] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

struct Adapted {
    Matrix basis;
    XDecomposition x;
};

Adapted adapted(const SmoothQuartic& s, const ProjPoint& p, std::span<const Vector> completion) {
    if (s.poly().evaluate(p.coords()).is_zero()) throw InnerPointError("inner point, out of scope");
    Matrix a = completion_matrix(p, completion);
    XDecomposition x = x_decompose(substitute_linear(s.poly(), a), 0);
    return {std::move(a), std::move(x)};
}

bool shear_identities(const XDecomposition& x) {
    const auto& c = x.c;
    const GaussianRational c0 = c[0].coefficient(Exponent{});
    const HomPoly c1sq = c[1] * c[1];
    if (c0 * GaussianRational(8) * c[2] != GaussianRational(3) * c1sq) return false;
    const HomPoly lhs = (GaussianRational(8) * c0 * c0) * c[3];
    const HomPoly rhs = (GaussianRational(4) * c0) * (c[1] * c[2]) - c1sq * c[1];
    return lhs == rhs;
}

void sort_points(std::vector<GaloisPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const GaloisPoint& a, const GaloisPoint& b) { return a.point < b.point; });
}

bool admissible_count(std::size_t n) { return n == 0 || n == 1 || n == 2 || n == 4; }

NormalForm form_from_separated(std::size_t count) {
    switch (count) {
        case 1: return NormalForm::form1;
        case 2: return NormalForm::form2;
        case 4: return NormalForm::form3;
        default: return NormalForm::unrecognized;
    }
}

}  // namespace

bool is_outer_galois_point(const SmoothQuartic& s, const ProjPoint& p, std::span<const Vector> completion) {
    return shear_identities(adapted(s, p, completion).x);
}

bool is_outer_galois_point(const SmoothQuartic& s, const ProjPoint& p) {
    const auto completion = standard_completion(p);
    return is_outer_galois_point(s, p, completion);
}

LinearAuto galois_generator(const SmoothQuartic& s, const ProjPoint& p) {
    const auto completion = standard_completion(p);
    Adapted ad = adapted(s, p, completion);
    if (!shear_identities(ad.x)) throw std::invalid_argument("not an outer Galois point");
    // X' = X + L(Y,Z,W) with L = c1 / (4 c0) removes every mixed term.
    const GaussianRational c0 = ad.x.c[0].coefficient(Exponent{});
    const GaussianRational scale = (GaussianRational(4) * c0).inverse();
    Matrix shear = Matrix::identity(4), unshear = Matrix::identity(4);
    for (int k = 1; k < 4; ++k) {
        Exponent e{};
        e[static_cast<std::size_t>(k)] = 1;
        const GaussianRational l = ad.x.c[1].coefficient(e) * scale;
        shear(0, static_cast<std::size_t>(k)) = l;
        unshear(0, static_cast<std::size_t>(k)) = -l;
    }
    const Matrix d = Matrix::diagonal({GaussianRational::i(), GaussianRational(1), GaussianRational(1), GaussianRational(1)});
    const Matrix m = ad.basis * unshear * d * shear * inverse(ad.basis);
    try {
        return LinearAuto::for_surface(s.poly(), m);
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("Galois generator failed verification: ") + e.what());
    }
}

const char* to_string(Completeness c) {
    return c == Completeness::proved_complete ? "proved-complete" : "candidates-only";
}

const char* to_string(NormalForm f) {
    switch (f) {
        case NormalForm::form1: return "form-1";
        case NormalForm::form2: return "form-2";
        case NormalForm::form3: return "form-3";
        case NormalForm::unrecognized: return "unrecognized";
    }
    return "?";
}

std::vector<int> separated_variables(const HomPoly& f) {
    std::vector<int> out;
    for (int v = 0; v < f.nvars(); ++v) {
        bool pure_seen = false, mixed = false;
        for (const auto& [e, c] : f.terms()) {
            if (e[static_cast<std::size_t>(v)] == 0) continue;
            if (e[static_cast<std::size_t>(v)] == f.degree()) pure_seen = true;
            else mixed = true;
        }
        if (pure_seen && !mixed) out.push_back(v);
    }
    return out;
}

GaloisReport enumerate_outer_galois_points(const SmoothQuartic& s, std::span<const ProjPoint> extra,
                                           const ZeroDimLimits& limits) {
    const HomPoly& f = s.poly();
    GaloisReport report;
    report.surface = f;
    report.normal_form = form_from_separated(separated_variables(f).size());

    std::vector<ProjPoint> tested;
    for (int k = 0; k < 4; ++k) tested.push_back(ProjPoint::coordinate(k));
    tested.insert(tested.end(), extra.begin(), extra.end());
    std::vector<ProjPoint> passing;
    for (const auto& p : tested) {
        if (f.evaluate(p.coords()).is_zero()) continue;
        if (is_outer_galois_point(s, p) && std::find(passing.begin(), passing.end(), p) == passing.end())
            passing.push_back(p);
    }

    const auto conditions = galois_conditions(f);
    const ZeroDimResult zeros = solve_zero_dimensional(conditions, limits);
    std::vector<ProjPoint> found;
    for (const auto& p : zeros.points) {
        // a cube polar at a point of S would make that point singular
        if (f.evaluate(p.coords()).is_zero()) throw std::logic_error("polar condition holds on the surface");
        if (!is_outer_galois_point(s, p)) throw std::logic_error("solver point rejected by the tester");
        found.push_back(p);
    }
    for (const auto& p : passing) {
        if (std::find(found.begin(), found.end(), p) != found.end()) continue;
        if (zeros.complete) throw std::logic_error("verified Galois point missing from a complete solution");
        found.push_back(p);
    }
    for (const auto& p : found) report.points.push_back({p, galois_generator(s, p)});
    sort_points(report.points);

    report.completeness = zeros.complete ? Completeness::proved_complete : Completeness::candidates_only;
    report.detail = zeros.detail;
    if (report.completeness == Completeness::proved_complete && !admissible_count(report.points.size()))
        throw std::logic_error("proved-complete count " + std::to_string(report.points.size()) +
                               " lies outside {0,1,2,4}");
    return report;
}

GaloisReport recognize_normal_form(const SmoothQuartic& s, const ZeroDimLimits& limits) {
    const HomPoly& f = s.poly();
    const auto sep = separated_variables(f);
    GaloisReport report;
    report.surface = f;
    report.normal_form = form_from_separated(sep.size());

    std::vector<ProjPoint> listed;
    if (report.normal_form == NormalForm::unrecognized) {
        for (int k = 0; k < 4; ++k) {
            ProjPoint p = ProjPoint::coordinate(k);
            if (!f.evaluate(p.coords()).is_zero() && is_outer_galois_point(s, p)) listed.push_back(p);
        }
    } else {
        for (int v : sep) {
            ProjPoint p = ProjPoint::coordinate(v);
            if (!is_outer_galois_point(s, p)) throw std::logic_error("normal-form point rejected by the tester");
            listed.push_back(p);
        }
    }
    for (const auto& p : listed) report.points.push_back({p, galois_generator(s, p)});
    sort_points(report.points);

    switch (report.normal_form) {
        case NormalForm::form3:
            report.completeness = Completeness::proved_complete;
            report.detail = "four points, the maximum";
            break;
        case NormalForm::unrecognized:
            report.completeness = Completeness::candidates_only;
            report.detail = "no syntactic normal form";
            break;
        default: {
            const GaloisReport full = enumerate_outer_galois_points(s, {}, limits);
            bool same = full.points.size() == report.points.size();
            for (std::size_t k = 0; same && k < full.points.size(); ++k)
                same = full.points[k].point == report.points[k].point;
            if (full.completeness == Completeness::proved_complete && same) {
                report.completeness = Completeness::proved_complete;
                report.detail = "confirmed by exact enumeration";
            } else {
                report.completeness = Completeness::candidates_only;
                report.detail = full.completeness == Completeness::proved_complete
                                    ? "enumeration found a different point set"
                                    : "enumeration inconclusive: " + full.detail;
            }
        }
    }
    return report;
}

}  // namespace qk3
