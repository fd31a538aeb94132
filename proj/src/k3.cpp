#include "qk3/k3.hpp"

#include "qk3/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

namespace qk3 {

GaussianRational symplectic_character(const SmoothQuartic& s, const LinearAuto& m) {
    const LinearAuto checked = LinearAuto::for_surface(s.poly(), m.matrix);
    if (checked.multiplier != m.multiplier) throw std::invalid_argument("multiplier does not match the surface");
    return determinant(m.matrix) / m.multiplier;
}

int FixedLocus::rational_curves() const {
    return static_cast<int>(std::count_if(curves.begin(), curves.end(), [](const FixedCurve& c) { return c.genus == 0; }));
}

namespace {

bool is_scalar(const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (r == c ? m(r, c) != m(0, 0) : !m(r, c).is_zero()) return false;
    return true;
}

FixedLocus locus_of(const HomPoly& f, const Matrix& m) {
    if (is_scalar(m)) throw UnsupportedInput("scalar matrix fixes all of S");
    FixedLocus out;
    for (auto& space : eigen_decompose_order4(m).spaces) {
        CurveSection sec = section(f, space.basis);
        switch (sec.kind) {
            case CurveSection::Kind::plane_quartic:
                if (!sec.smooth) throw UnsupportedInput("unsupported degenerate input: singular fixed plane section");
                out.curves.push_back({*sec.genus, true});
                break;
            case CurveSection::Kind::line_in_surface:
                out.curves.push_back({0, true});
                break;
            default:
                out.isolated_points += sec.point_count;
        }
        out.eigenvalues.push_back(space.eigenvalue);
        out.sections.push_back(std::move(sec));
    }
    return out;
}

Matrix columns(std::span<const Vector> basis) {
    Matrix a(basis.front().size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) = basis[c][r];
    return a;
}

bool same_span(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    Matrix both(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) both(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) both(r, a.cols() + c) = b(r, c);
    }
    return rank(both) == rank(a) && rank(a) == rank(b);
}

bool is_curve(const CurveSection& s) {
    return s.kind == CurveSection::Kind::plane_quartic || s.kind == CurveSection::Kind::line_in_surface;
}

}  // namespace

FixedLocusReport fixed_locus(const SmoothQuartic& s, const LinearAuto& m) {
    FixedLocusReport report;
    static_cast<FixedLocus&>(report) = locus_of(s.poly(), m.matrix);
    const Matrix sq = m.matrix * m.matrix;
    if (is_scalar(sq)) return report;
    report.sigma_squared = locus_of(s.poly(), sq);
    const auto& secs = report.sigma_squared->sections;
    for (std::size_t i = 0; i < secs.size(); ++i) {
        if (!is_curve(secs[i])) continue;
        const Matrix image = m.matrix * columns(secs[i].ambient);
        for (std::size_t j = i + 1; j < secs.size(); ++j)
            if (is_curve(secs[j]) && same_span(image, columns(secs[j].ambient))) ++report.a_count;
    }
    return report;
}

const char* to_string(AutoKind k) {
    switch (k) {
        case AutoKind::symplectic: return "symplectic";
        case AutoKind::purely_ns4: return "purely-ns-4";
        case AutoKind::npns: return "npns";
    }
    return "?";
}

AutomorphismType classify(const FixedLocusReport& report, const GaussianRational& u) {
    AutomorphismType t;
    t.character = u;
    t.n = report.isolated_points;
    t.a = report.a_count;
    t.curves = report.curves;
    const GaussianRational i = GaussianRational::i();
    if (u == GaussianRational(1)) {
        if (!report.curves.empty()) throw NoMatchingType("symplectic automorphism with a fixed curve");
        t.kind = AutoKind::symplectic;
        t.table_source = "none";
        return t;
    }
    if (u == GaussianRational(-1)) {
        if (!report.curves.empty()) throw NoMatchingType("order-4 automorphism acting by -1 with a fixed curve");
        // n -> (r, l)
        static const std::map<int, std::pair<int, int>> npns{{0, {6, 8}}, {2, {7, 7}}, {4, {8, 6}}, {6, {9, 5}}, {8, {10, 4}}};
        const auto it = npns.find(t.n);
        if (it == npns.end()) throw NoMatchingType("no (r,l,n) row with n = " + std::to_string(t.n));
        t.kind = AutoKind::npns;
        t.tuple = {it->second.first, it->second.second, t.n};
        t.table_source = "order-4 type table, keyed by n";
        return t;
    }
    if (u != i && u != -i) throw NoMatchingType("character " + u.to_string() + " is not a 4th root of unity");

    int g = 0, big = 0, k = 0, sum = 0;
    for (const auto& c : report.curves) {
        if (!c.smooth) throw NoMatchingType("singular fixed curve");
        sum += 1 - c.genus;
        if (c.genus == 0) ++k;
        else {
            g = c.genus;
            ++big;
        }
    }
    // (k, a, g) -> r
    static const std::map<std::tuple<int, int, int>, int> purely{
        {{0, 0, 3}, 1}, {{0, 0, 2}, 4}, {{0, 1, 3}, 2}, {{0, 1, 2}, 5}, {{0, 2, 2}, 6}};
    const auto it = purely.find({k, t.a, g});
    if (big != 1 || it == purely.end())
        throw NoMatchingType("no (r,k,a,g) row for k=" + std::to_string(k) + ", a=" + std::to_string(t.a) +
                             ", curves of positive genus: " + std::to_string(big));
    if (t.n != 2 * sum + 4)
        throw NoMatchingType("isolated point count " + std::to_string(t.n) + " violates n = 2*sum(1-g) + 4 = " +
                             std::to_string(2 * sum + 4));
    t.kind = AutoKind::purely_ns4;
    t.tuple = {it->second, k, t.a, g};
    t.table_source = "order-4 type table, keyed by (k,a,g)";
    return t;
}

AutomorphismType classify(const SmoothQuartic& s, const LinearAuto& m) {
    const GaussianRational u = symplectic_character(s, m);
    if (is_scalar(m.matrix * m.matrix)) throw NoMatchingType("automorphism is not of order 4");
    return classify(fixed_locus(s, m), u);
}

bool hurwitz_check(long g_top, long g_base, long degree, long ramification) {
    return 2 * g_top - 2 == degree * (2 * g_base - 2) + ramification;
}

std::optional<long> solve_m(long g_top, long g_base, long degree) {
    const long m = 2 * g_top - 2 - degree * (2 * g_base - 2);
    if (m < 0) return std::nullopt;
    return m;
}

long moduli_dimension(long count, std::span<const Matrix> automorphisms) {
    for (const auto& m : automorphisms)
        if (m.rows() != 4 || m.cols() != 4 || rank(m) != 4) throw std::invalid_argument("expected invertible 4x4 matrices");
    const long dim = count - static_cast<long>(centralizer_dimension(automorphisms));
    if (dim < 0) throw std::invalid_argument("family not generically free");
    return dim;
}

long npns_moduli_dim(long l) {
    if (l < 2) throw std::invalid_argument("l must be at least 2");
    return l - 2;
}

}  // namespace qk3
