#include "qk3/galois.hpp"
#include "qk3/geometry.hpp"
#include "qk3/linalg.hpp"
#include "qk3/univariate.hpp"
#include "support/groebner.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace qk3;

namespace {

const GaussianRational I = GaussianRational::i();

HomPoly P(const char* text, int nvars = 4) { return parse_polynomial(text, 4, nvars); }

Matrix sigma(std::size_t k) {
    Matrix m = Matrix::identity(4);
    m(k, k) = I;
    return m;
}

// M == c * N for some c; both normalized to order 4, so c is a 4th root of unity.
bool proportional(const Matrix& m, const Matrix& n) {
    for (const auto& c : fourth_roots_of_unity())
        if (m == c * n) return true;
    return false;
}

std::vector<Vector> random_completion(std::mt19937_64& rng, const ProjPoint& p) {
    for (;;) {
        std::vector<Vector> q{testing_support::random_vector(rng, 4, 3), testing_support::random_vector(rng, 4, 3),
                              testing_support::random_vector(rng, 4, 3)};
        Matrix a(4, 4);
        for (std::size_t r = 0; r < 4; ++r) {
            a(r, 0) = p.coords()[r];
            for (std::size_t c = 0; c < 3; ++c) a(r, c + 1) = q[c][r];
        }
        if (rank(a) == 4) return q;
    }
}

std::vector<ProjPoint> points_of(const GaloisReport& r) {
    std::vector<ProjPoint> out;
    for (const auto& p : r.points) out.push_back(p.point);
    return out;
}

const std::vector<ProjPoint> coordinate_points{ProjPoint::coordinate(0), ProjPoint::coordinate(1),
                                               ProjPoint::coordinate(2), ProjPoint::coordinate(3)};

}  // namespace

TEST(GaloisTester, FermatCoordinatePoints) {
    const SmoothQuartic s(P("X^4+Y^4+Z^4+W^4"));
    for (const auto& p : coordinate_points) EXPECT_TRUE(is_outer_galois_point(s, p));
}

TEST(GaloisTester, FermatDiagonalPointFails) {
    const SmoothQuartic s(P("X^4+Y^4+Z^4+W^4"));
    const ProjPoint p = ProjPoint::parse("1:1:0:0");
    EXPECT_FALSE(is_outer_galois_point(s, p));
    // adapted basis {P, e2, e3, e4}: F(X, X+Y, Z, W) = X^4 + (X+Y)^4 + Z^4 + W^4,
    // so c0 = 2, c1 = 4Y, c2 = 6Y^2 and 8 c0 c2 = 96 Y^2 while 3 c1^2 = 48 Y^2
    const Matrix a{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    const auto x = x_decompose(substitute_linear(s.poly(), a), 0);
    EXPECT_EQ(x.c[0], HomPoly::constant(4, 2));
    EXPECT_EQ(x.c[1], parse_polynomial("4*Y", 1));
    EXPECT_EQ(x.c[2], parse_polynomial("6*Y^2", 2));
    EXPECT_NE(GaussianRational(8) * GaussianRational(2) * x.c[2], GaussianRational(3) * (x.c[1] * x.c[1]));
}

TEST(GaloisTester, FormTwoSecondPoint) {
    const SmoothQuartic s(P("X^4+Y^4+Z^4+Z*W^3+W^4"));
    EXPECT_TRUE(is_outer_galois_point(s, ProjPoint::parse("0:1:0:0")));
    EXPECT_TRUE(is_outer_galois_point(s, ProjPoint::parse("1:0:0:0")));
    EXPECT_FALSE(is_outer_galois_point(s, ProjPoint::parse("0:0:1:0")));
}

TEST(GaloisTester, InnerPointsAndSingularSurfacesRefused) {
    const SmoothQuartic s(P("X^4-Y^4+Z^4+W^4"));
    EXPECT_THROW(is_outer_galois_point(s, ProjPoint::parse("1:1:0:0")), InnerPointError);
    EXPECT_THROW(is_outer_galois_point(s, ProjPoint::parse("1:i:0:0")), InnerPointError);
    EXPECT_THROW(SmoothQuartic(P("X^4+Y^4+Z^4")), SingularSurfaceError);
}

TEST(GaloisTester, BasisCompletionInvariance) {
    std::mt19937_64 rng(1);
    const std::vector<std::pair<const char*, const char*>> cases{
        {"X^4+Y^4+Z^4+W^4", "1:0:0:0"},
        {"X^4+Y^4+Z^4+W^4", "1:1:0:0"},
        {"X^4+Y^4+Z^4+Z*W^3+W^4", "0:1:0:0"},
        {"X^4+Y^4+Z^4+W^4+Y^2*Z*W", "1:0:0:0"},
        {"X^4+Y^4+Z^4+W^4+X*Y*Z*W", "1:2:0:1"},
    };
    for (const auto& [surface, point] : cases) {
        const SmoothQuartic s(P(surface));
        const ProjPoint p = ProjPoint::parse(point);
        const bool verdict = is_outer_galois_point(s, p);
        for (int t = 0; t < 20; ++t) EXPECT_EQ(is_outer_galois_point(s, p, random_completion(rng, p)), verdict);
    }
}

TEST(GaloisGenerator, DiagonalCases) {
    const SmoothQuartic fermat(P("X^4+Y^4+Z^4+W^4"));
    for (std::size_t k = 0; k < 4; ++k) {
        const auto g = galois_generator(fermat, ProjPoint::coordinate(static_cast<int>(k)));
        EXPECT_EQ(g.matrix, sigma(k));
        EXPECT_EQ(g.multiplier, GaussianRational(1));
    }
    const SmoothQuartic form1(P("X^4+Y^4+Z^4+W^4+Y^2*Z*W"));
    const auto g = galois_generator(form1, ProjPoint::coordinate(0));
    EXPECT_EQ(g.matrix, sigma(0));
    EXPECT_EQ(g.multiplier, GaussianRational(1));
    EXPECT_THROW(galois_generator(fermat, ProjPoint::parse("1:1:0:0")), std::invalid_argument);
}

TEST(GaloisGenerator, ConjugationCovariance) {
    std::mt19937_64 rng(2);
    const HomPoly fermat = P("X^4+Y^4+Z^4+W^4");
    for (int t = 0; t < 10; ++t) {
        const Matrix a = testing_support::random_invertible(rng);
        const Matrix ai = inverse(a);
        const SmoothQuartic s(substitute_linear(fermat, a));
        for (std::size_t k = 0; k < 4; ++k) {
            const ProjPoint p(ai.column(k));
            ASSERT_TRUE(is_outer_galois_point(s, p));
            EXPECT_TRUE(proportional(galois_generator(s, p).matrix, ai * sigma(k) * a));
        }
        EXPECT_FALSE(is_outer_galois_point(s, ProjPoint(ai * Vector{1, 1, 0, 0})));
    }
}

TEST(GaloisGenerator, HomologyStructure) {
    std::mt19937_64 rng(3);
    const HomPoly base = P("X^4+Y^4+Z^4+W^4+Y^2*Z*W");
    for (int t = 0; t < 5; ++t) {
        const Matrix a = testing_support::random_invertible(rng);
        const SmoothQuartic s(substitute_linear(base, a));
        const ProjPoint p(inverse(a).column(0));
        const auto g = galois_generator(s, p);
        EXPECT_EQ(g.matrix.power(4), Matrix::identity(4));
        EXPECT_EQ(substitute_linear(s.poly(), g.matrix), g.multiplier * s.poly());
        const auto dec = eigen_decompose_order4(g.matrix);
        ASSERT_EQ(dec.spaces.size(), 2u);
        EXPECT_EQ(dec.spaces[0].eigenvalue, GaussianRational(1));
        EXPECT_EQ(dec.spaces[0].basis.size(), 3u);
        EXPECT_EQ(dec.spaces[1].eigenvalue, I);
        ASSERT_EQ(dec.spaces[1].basis.size(), 1u);
        EXPECT_EQ(ProjPoint(dec.spaces[1].basis[0]), p);
    }
}

TEST(GaloisGenerator, PermutesFibersCyclically) {
    std::mt19937_64 rng(4);
    const SmoothQuartic s(P("X^4+Y^4+Z^4+W^4+Y^2*Z*W"));
    const ProjPoint p = ProjPoint::coordinate(0);
    const Matrix m = galois_generator(s, p).matrix;
    const Vector& pv = p.coords();
    for (int t = 0; t < 10; ++t) {
        const Vector q = testing_support::random_vector(rng, 4, 3);
        // M Q = alpha P + beta Q since M is a homology with center P
        const Vector mq = m * q;
        std::size_t j = 1;
        while (q[j].is_zero()) ++j;
        const GaussianRational beta = mq[j] / q[j];
        const GaussianRational alpha = (mq[0] - beta * q[0]) / pv[0];
        for (std::size_t k = 0; k < 4; ++k) ASSERT_EQ(mq[k], alpha * pv[k] + beta * q[k]);
        // g(s, t) = F(sP + tQ) and the action (s, t) -> (i s + alpha t, beta t)
        const Matrix line = Matrix::from_columns(std::vector<Vector>{pv, q});
        const HomPoly g = substitute_linear(s.poly(), line);
        const Matrix n{{I, alpha}, {0, beta}};
        EXPECT_EQ(substitute_linear(g, n), g);
        EXPECT_FALSE(g.evaluate(Vector{1, 0}).is_zero());
        // the only fixed point of u -> i u + alpha is the axis point, off S for this line
        const GaussianRational axis = alpha / (GaussianRational(1) - I);
        EXPECT_FALSE(g.evaluate(Vector{axis, 1}).is_zero());
        EXPECT_EQ(squarefree_profile(g), (std::vector<int>{1, 1, 1, 1}));
    }
}

TEST(GaloisConditions, FermatQuadricsSpanCoordinateProducts) {
    const auto q = galois_conditions(P("X^4+Y^4+Z^4+W^4"));
    Matrix m(q.size(), 10);
    for (std::size_t r = 0; r < q.size(); ++r) {
        const auto d = q[r].dense_coefficients();
        for (std::size_t c = 0; c < 10; ++c) m(r, c) = d[c];
    }
    EXPECT_EQ(rank(m), 6u);
    for (const auto& f : q)
        for (const auto& [e, c] : f.terms()) EXPECT_TRUE(std::count(e.begin(), e.end(), 1) == 2) << f.to_string();
}

TEST(NormalForm, Recognition) {
    const auto r3 = recognize_normal_form(SmoothQuartic(P("X^4+Y^4+Z^4+W^4")));
    EXPECT_EQ(r3.normal_form, NormalForm::form3);
    EXPECT_EQ(r3.completeness, Completeness::proved_complete);
    EXPECT_EQ(points_of(r3), coordinate_points);

    const auto r2 = recognize_normal_form(SmoothQuartic(P("X^4+Y^4+Z^4+Z*W^3+W^4")));
    EXPECT_EQ(r2.normal_form, NormalForm::form2);
    EXPECT_EQ(r2.completeness, Completeness::proved_complete);
    EXPECT_EQ(points_of(r2), (std::vector<ProjPoint>{ProjPoint::coordinate(0), ProjPoint::coordinate(1)}));

    // the plane quartic must be smooth for the surface to be; checked independently
    EXPECT_EQ(oracle::smoothness_by_groebner(P("Y^4+Z^4+W^4+Y^2*Z*W", 3)), oracle::Verdict::smooth);
    const auto r1 = recognize_normal_form(SmoothQuartic(P("X^4+Y^4+Z^4+W^4+Y^2*Z*W")));
    EXPECT_EQ(r1.normal_form, NormalForm::form1);
    EXPECT_EQ(r1.completeness, Completeness::proved_complete);
    EXPECT_EQ(points_of(r1), std::vector<ProjPoint>{ProjPoint::coordinate(0)});
}

TEST(NormalForm, PermutedAndScaledVariables) {
    const auto r = recognize_normal_form(SmoothQuartic(P("2*Z^4+Y^3*X+X^4+W^4*i+Y^4")));
    EXPECT_EQ(r.normal_form, NormalForm::form2);
    EXPECT_EQ(points_of(r), (std::vector<ProjPoint>{ProjPoint::coordinate(2), ProjPoint::coordinate(3)}));
    const auto u = recognize_normal_form(SmoothQuartic(P("X^4+Y^4+Z^4+W^4+X*Y*Z*W")));
    EXPECT_EQ(u.normal_form, NormalForm::unrecognized);
    EXPECT_EQ(u.completeness, Completeness::candidates_only);
}

TEST(NormalForm, HiddenFermatIsNotClaimedComplete) {
    // Z^4 + 6 Z^2 W^2 + W^4 is linearly equivalent to Z^4 + W^4 (up to scaling)
    // via Z -> Z+W, W -> Z-W, so the surface has four Galois points although
    // only two are syntactically visible.
    const SmoothQuartic s(P("X^4+Y^4+Z^4+6*Z^2*W^2+W^4"));
    const auto r = recognize_normal_form(s);
    EXPECT_EQ(r.normal_form, NormalForm::form2);
    EXPECT_EQ(r.points.size(), 2u);
    EXPECT_EQ(r.completeness, Completeness::candidates_only);
    const auto all = enumerate_outer_galois_points(s);
    EXPECT_EQ(all.completeness, Completeness::proved_complete);
    EXPECT_EQ(all.points.size(), 4u);
    EXPECT_TRUE(is_outer_galois_point(s, ProjPoint::parse("0:0:1:1")));
    EXPECT_TRUE(is_outer_galois_point(s, ProjPoint::parse("0:0:1:-1")));
}

TEST(Enumerate, Fermat) {
    const auto r = enumerate_outer_galois_points(SmoothQuartic(P("X^4+Y^4+Z^4+W^4")));
    EXPECT_EQ(r.completeness, Completeness::proved_complete);
    EXPECT_EQ(points_of(r), coordinate_points);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(r.points[k].generator.matrix, sigma(k));
}

TEST(Enumerate, FormOneWithRandomPlaneQuartic) {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 5) {
        const HomPoly f4 = testing_support::random_form(rng, 3, 4, 15, 3);
        if (!is_smooth_plane_quartic(f4)) continue;
        const HomPoly f = P("X^4") + f4.embed(4, std::vector<int>{1, 2, 3});
        const auto r = enumerate_outer_galois_points(SmoothQuartic(f));
        EXPECT_EQ(r.completeness, Completeness::proved_complete) << f.to_string();
        EXPECT_EQ(points_of(r), std::vector<ProjPoint>{ProjPoint::coordinate(0)}) << f.to_string();
        ++done;
    }
}

TEST(Enumerate, SeparatedBinaryPartGivesTwoPoints) {
    // Z and W are separated: Z^4 + W^4 + F4(X,Y) with F4 = Y(X^3 + Y^3) squarefree
    const auto r = enumerate_outer_galois_points(SmoothQuartic(P("X^3*Y+Y^4+Z^4+W^4")));
    EXPECT_EQ(r.completeness, Completeness::proved_complete);
    EXPECT_EQ(points_of(r), (std::vector<ProjPoint>{ProjPoint::coordinate(2), ProjPoint::coordinate(3)}));
}

TEST(Enumerate, NoGaloisPoints) {
    const SmoothQuartic s(P("X^4+Y^4+Z^4+W^4+X*Y*Z*W"));
    const auto r = enumerate_outer_galois_points(s);
    EXPECT_EQ(r.completeness, Completeness::proved_complete);
    EXPECT_TRUE(r.points.empty());
    for (const auto& p : coordinate_points) EXPECT_FALSE(is_outer_galois_point(s, p));
}

TEST(Enumerate, SubstitutionCovariance) {
    std::mt19937_64 rng(6);
    const std::vector<const char*> bases{"X^4+Y^4+Z^4+W^4", "X^4+Y^4+Z^4+Z*W^3+W^4", "X^4+Y^4+Z^4+W^4+Y^2*Z*W"};
    for (const char* base : bases) {
        const auto reference = enumerate_outer_galois_points(SmoothQuartic(P(base)));
        for (int t = 0; t < 3; ++t) {
            const Matrix a = testing_support::random_invertible(rng);
            const Matrix ai = inverse(a);
            const auto r = enumerate_outer_galois_points(SmoothQuartic(substitute_linear(P(base), a)));
            EXPECT_EQ(r.completeness, Completeness::proved_complete);
            std::vector<ProjPoint> expect;
            for (const auto& p : reference.points) expect.push_back(ProjPoint(ai * p.point.coords()));
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(points_of(r), expect) << base;
        }
    }
}

TEST(Enumerate, ExtraCandidatesAndCounts) {
    const SmoothQuartic s(P("X^4+Y^4+Z^4+W^4"));
    const std::vector<ProjPoint> extra{ProjPoint::parse("1:1:0:0"), ProjPoint::parse("0:1:0:0")};
    EXPECT_EQ(enumerate_outer_galois_points(s, extra).points.size(), 4u);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        const HomPoly f = testing_support::random_form(rng, 4, 4, 6) + P("X^4+Y^4+Z^4+W^4");
        if (!is_smooth_surface(f)) continue;
        const auto r = enumerate_outer_galois_points(SmoothQuartic(f));
        if (r.completeness == Completeness::proved_complete) {
            const std::size_t n = r.points.size();
            EXPECT_TRUE(n == 0 || n == 1 || n == 2 || n == 4) << f.to_string();
        }
    }
}

TEST(Enumerate, DegreeCapDowngradesToCandidates) {
    ZeroDimLimits tight;
    tight.max_degree = 3;
    const auto r = enumerate_outer_galois_points(SmoothQuartic(P("X^4+Y^4+Z^4+W^4")), {}, tight);
    EXPECT_EQ(r.completeness, Completeness::candidates_only);
    EXPECT_EQ(r.points.size(), 4u);
}
