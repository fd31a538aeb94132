// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "qk3/galois.hpp"
#include "qk3/geometry.hpp"
#include "qk3/k3.hpp"
#include "qk3/lattice.hpp"
#include "qk3/linalg.hpp"
#include "qk3/univariate.hpp"
#include "support/corpus.hpp"
#include "support/groebner.hpp"
#include "support/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace qk3;
using testing_support::random_form;
using testing_support::random_invertible;
using testing_support::random_vector;

namespace {

const GaussianRational I = GaussianRational::i();

HomPoly P(const char* text) { return parse_polynomial(text, 4); }

Matrix sigma(std::size_t k) {
    Matrix m = Matrix::identity(4);
    m(k, k) = I;
    return m;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Failure messages collect here; a criterion passes when nothing was added.
struct Check {
    std::ostringstream why;
    int failures = 0;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ < 3) why << (failures > 1 ? "; " : "") << what;
    }
};

HomPoly form_one_f4(std::mt19937_64& rng) {
    for (;;) {
        const HomPoly f4 = random_form(rng, 3, 4, 15, 3);
        if (is_smooth_plane_quartic(f4)) return f4;
    }
}

HomPoly form_two_f4(std::mt19937_64& rng) {
    for (;;) {
        const HomPoly f4 = random_form(rng, 2, 4, 5, 4);
        if (squarefree_profile(f4) == std::vector<int>{1, 1, 1, 1}) return f4;
    }
}

// purely non-symplectic cases seen anywhere in the run, for the n-formula
std::vector<AutomorphismType> purely_cases;
// (character, report) pairs for the fixed-curve consistency check
std::vector<std::pair<GaussianRational, FixedLocusReport>> lemma_cases;

void ac1(Check& c) {
    const auto t0 = Clock::now();
    const auto r = enumerate_outer_galois_points(SmoothQuartic(P("X^4+Y^4+Z^4+W^4")));
    const double dt = seconds_since(t0);
    c.expect(r.completeness == Completeness::proved_complete, "not proved complete");
    c.expect(r.points.size() == 4, std::to_string(r.points.size()) + " points");
    for (std::size_t k = 0; k < r.points.size() && k < 4; ++k) {
        c.expect(r.points[k].point == ProjPoint::coordinate(static_cast<int>(k)), "point " + r.points[k].point.to_string());
        c.expect(r.points[k].generator.matrix == sigma(k), "generator " + std::to_string(k));
    }
    c.expect(dt < 30, "took " + std::to_string(dt) + " s");
}

void ac2(Check& c) {
    std::mt19937_64 rng(202);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
        const auto t0 = Clock::now();
        const HomPoly f = P("X^4") + form_one_f4(rng).embed(4, std::vector<int>{1, 2, 3});
        const SmoothQuartic s(f);
        c.expect(is_outer_galois_point(s, ProjPoint::coordinate(0)), "tester rejects [1:0:0:0] on " + f.to_string());
        const LinearAuto m = LinearAuto::for_surface(f, sigma(0));
        const auto type = classify(s, m);
        c.expect(type.kind == AutoKind::purely_ns4 && type.tuple == std::vector<int>{1, 0, 0, 3},
                 "wrong type on " + f.to_string());
        c.expect(type.curves.size() == 1 && type.curves[0].genus == 3, "fixed curves on " + f.to_string());
        c.expect(type.n == 0, "n = " + std::to_string(type.n));
        if (type.kind == AutoKind::purely_ns4) purely_cases.push_back(type);
        lemma_cases.emplace_back(type.character, fixed_locus(s, m));
        worst = std::max(worst, seconds_since(t0));
    }
    c.expect(worst < 10, "slowest surface " + std::to_string(worst) + " s");
}

void ac3(Check& c) {
    std::mt19937_64 rng(303);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
        const auto t0 = Clock::now();
        const HomPoly f = P("X^4+Y^4") + form_two_f4(rng).embed(4, std::vector<int>{2, 3});
        const SmoothQuartic s(f);
        c.expect(is_outer_galois_point(s, ProjPoint::coordinate(0)) && is_outer_galois_point(s, ProjPoint::coordinate(1)),
                 "tester rejects a coordinate point on " + f.to_string());
        const LinearAuto m = LinearAuto::for_surface(f, sigma(0) * sigma(1));
        const auto fl = fixed_locus(s, m);
        c.expect(fl.curves.empty() && fl.isolated_points == 8, "fixed locus on " + f.to_string());
        const auto type = classify(s, m);
        c.expect(type.kind == AutoKind::npns && type.tuple == std::vector<int>{10, 4, 8}, "wrong type on " + f.to_string());
        lemma_cases.emplace_back(type.character, fl);
        worst = std::max(worst, seconds_since(t0));
    }
    c.expect(worst < 10, "slowest surface " + std::to_string(worst) + " s");
}

void ac4(Check& c) {
    const SmoothQuartic f1(P("X^4+Y^4+Z^4+W^4+Y^2*Z*W"));
    const SmoothQuartic f2(P("X^4+Y^4+Z^4+Z*W^3+W^4"));
    const SmoothQuartic fermat(P("X^4+Y^4+Z^4+W^4"));
    const auto m1 = LinearAuto::for_surface(f1.poly(), sigma(0));
    const auto m2 = LinearAuto::for_surface(f2.poly(), sigma(0) * sigma(1));
    const auto m3 = LinearAuto::for_surface(fermat.poly(), Matrix::diagonal({I, -I, 1, 1}));
    const auto u1 = symplectic_character(f1, m1), u2 = symplectic_character(f2, m2), u3 = symplectic_character(fermat, m3);
    c.expect(u1 == I, "sigma1 on form 1: " + u1.to_string());
    c.expect(u2 == GaussianRational(-1), "sigma1 sigma2 on form 2: " + u2.to_string());
    c.expect(u3 == GaussianRational(1), "diag(i,-i,1,1) on Fermat: " + u3.to_string());
    lemma_cases.emplace_back(u1, fixed_locus(f1, m1));
    lemma_cases.emplace_back(u2, fixed_locus(f2, m2));
    lemma_cases.emplace_back(u3, fixed_locus(fermat, m3));
    for (const auto& [u, report] : lemma_cases)
        if (u == GaussianRational(1) || u == GaussianRational(-1))
            c.expect(report.curves.empty(), "fixed curve with character " + u.to_string());
    c.expect(lemma_cases.size() == 43, std::to_string(lemma_cases.size()) + " cases checked");
}

void ac5(Check& c) {
    const SmoothQuartic fermat(P("X^4+Y^4+Z^4+W^4"));
    for (std::size_t k = 0; k < 4; ++k)
        purely_cases.push_back(classify(fermat, LinearAuto::for_surface(fermat.poly(), sigma(k))));
    const SmoothQuartic f1(P("X^4+Y^4+Z^4+W^4+Y^2*Z*W"));
    purely_cases.push_back(classify(f1, LinearAuto::for_surface(f1.poly(), sigma(0))));
    for (const auto& t : purely_cases) {
        int sum = 0;
        for (const auto& curve : t.curves) sum += 1 - curve.genus;
        c.expect(t.n == 2 * sum + 4, "n = " + std::to_string(t.n) + " against " + std::to_string(2 * sum + 4));
    }
    c.expect(purely_cases.size() >= 25, std::to_string(purely_cases.size()) + " purely non-symplectic cases");
}

void ac6(Check& c) {
    const std::vector<Matrix> s12{sigma(0), sigma(1)};
    c.expect(moduli_dimension(7, s12) == 1, "moduli_dimension(7, {s1, s2})");
    c.expect(centralizer_dimension(s12) == 6, "centralizer dimension");
    c.expect(npns_moduli_dim(4) == 2, "npns_moduli_dim(4)");
}

void ac7(Check& c) {
    const auto t0 = Clock::now();
    const auto g = GramMatrix2::from_entries(8, 0, 8);
    const auto r = reduce_gram(g);
    c.expect(r.form == g, "diag(8,8) is not its own canonical form");
    c.expect(reduce_gram(r.form).form == r.form, "not idempotent");
    std::mt19937_64 rng(707);
    std::uniform_int_distribution<long> d(-10, 10);
    int done = 0;
    while (done < 100) {
        // det 1 with entries bounded by 10: draw three, solve for the fourth
        const long p = d(rng), q = d(rng), s = d(rng);
        if (p == 0 || (1 + q * s) % p != 0) continue;
        const long t = (1 + q * s) / p;
        if (t < -10 || t > 10) continue;
        const Unimodular2 u{{{BigInt(p), BigInt(q)}, {BigInt(s), BigInt(t)}}};
        const auto moved = transform(g, u);
        const auto red = reduce_gram(moved);
        c.expect(red.form == r.form, "reduce(T G T^T) = " + red.form.to_string());
        c.expect(moved.determinant() == g.determinant() && red.form.determinant() == g.determinant(), "determinant");
        c.expect(transform(moved, red.transform) == red.form, "transform does not realize the reduction");
        c.expect(reduce_gram(red.form).form == red.form, "not idempotent");
        ++done;
    }
    const double dt = seconds_since(t0);
    c.expect(dt < 1, "took " + std::to_string(dt) + " s");
}

void ac8(Check& c) {
    const auto t0 = Clock::now();
    int smooth = 0, singular = 0;
    for (const char* text : testing_support::smoothness_corpus) {
        const HomPoly f = P(text);
        const bool macaulay = is_smooth_surface(f);
        const auto verdict = oracle::smoothness_by_groebner(f);
        c.expect(verdict != oracle::Verdict::undecided, std::string("oracle undecided on ") + text);
        c.expect(macaulay == (verdict == oracle::Verdict::smooth), std::string("disagreement on ") + text);
        (macaulay ? smooth : singular)++;
    }
    c.expect(smooth > 0 && singular > 0, "corpus is not a mix");
    const double dt = seconds_since(t0);
    c.expect(dt < 60, "took " + std::to_string(dt) + " s");
}

void ac9(Check& c) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(909);

    // basis-completion invariance, 20 completions x 5 surfaces
    const std::vector<std::pair<const char*, const char*>> cases{
        {"X^4+Y^4+Z^4+W^4", "1:0:0:0"},
        {"X^4+Y^4+Z^4+W^4", "1:1:0:0"},
        {"X^4+Y^4+Z^4+Z*W^3+W^4", "0:1:0:0"},
        {"X^4+Y^4+Z^4+W^4+Y^2*Z*W", "1:0:0:0"},
        {"X^4+Y^4+Z^4+W^4+X*Y*Z*W", "1:2:0:1"},
    };
    for (const auto& [text, pt] : cases) {
        const SmoothQuartic s(P(text));
        const ProjPoint p = ProjPoint::parse(pt);
        const bool verdict = is_outer_galois_point(s, p);
        int done = 0;
        while (done < 20) {
            std::vector<Vector> q{random_vector(rng, 4, 3), random_vector(rng, 4, 3), random_vector(rng, 4, 3)};
            std::vector<Vector> cols{p.coords()};
            cols.insert(cols.end(), q.begin(), q.end());
            if (rank(Matrix::from_columns(cols)) != 4) continue;
            c.expect(is_outer_galois_point(s, p, q) == verdict, std::string("completion changes verdict on ") + text);
            ++done;
        }
    }

    // substitution covariance of the Galois points
    for (const char* base : {"X^4+Y^4+Z^4+W^4", "X^4+Y^4+Z^4+Z*W^3+W^4", "X^4+Y^4+Z^4+W^4+Y^2*Z*W"}) {
        const auto ref = enumerate_outer_galois_points(SmoothQuartic(P(base)));
        for (int t = 0; t < 2; ++t) {
            const Matrix a = random_invertible(rng);
            const Matrix ai = inverse(a);
            const auto r = enumerate_outer_galois_points(SmoothQuartic(substitute_linear(P(base), a)));
            std::vector<ProjPoint> want, got;
            for (const auto& g : ref.points) want.push_back(ProjPoint(ai * g.point.coords()));
            for (const auto& g : r.points) got.push_back(g.point);
            std::sort(want.begin(), want.end());
            c.expect(r.completeness == Completeness::proved_complete && got == want, std::string("covariance on ") + base);
        }
    }

    // Euler identity and x_decompose round trip
    for (int t = 0; t < 20; ++t) {
        const HomPoly f = random_form(rng, 4, 4, 12);
        HomPoly euler(4, 4);
        const auto d = partials(f);
        for (int k = 0; k < 4; ++k) euler += HomPoly::variable(4, k) * d[static_cast<std::size_t>(k)];
        c.expect(euler == GaussianRational(4) * f, "Euler identity");
        for (int chart = 0; chart < 4; ++chart)
            c.expect(x_decompose(f, chart).reassemble() == f, "x_decompose round trip");
    }

    // squarefree profile sums to the degree
    for (int t = 0; t < 20; ++t) {
        HomPoly f = random_form(rng, 2, 2, 3);
        f = f * f * random_form(rng, 2, 1, 2) * random_form(rng, 2, 1, 2);
        if (f.is_zero()) continue;
        const auto prof = squarefree_profile(f);
        int sum = 0;
        for (int m : prof) sum += m;
        c.expect(sum == 6, "profile of " + f.to_string() + " sums to " + std::to_string(sum));
    }

    const double dt = seconds_since(t0);
    c.expect(dt < 120, "took " + std::to_string(dt) + " s");
}

void ac10(Check& c) {
    c.expect(solve_m(1, 1) == 0, "solve_m(1,1)");
    c.expect(solve_m(1, 0) == 4, "solve_m(1,0)");
    c.expect(hurwitz_check(1, 1, 2, 0) && hurwitz_check(1, 0, 2, 4), "hurwitz_check");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
        {"Fermat quartic: four coordinate Galois points, proved complete, diagonal generators", ac1},
        {"form 1: tester and type (1,0,0,3) on 20 random surfaces", ac2},
        {"form 2: tester, 8 isolated fixed points and type (10,4,8) on 20 random surfaces", ac3},
        {"symplectic characters and fixed-curve consistency", ac4},
        {"n = 2 sum(1-g) + 4 on every purely non-symplectic case", ac5},
        {"moduli counts", ac6},
        {"Gauss reduction under 100 random SL2(Z) transforms of diag(8,8)", ac7},
        {"Macaulay smoothness against the Groebner oracle on 30 surfaces", ac8},
        {"property suites", ac9},
        {"Hurwitz ramification counts", ac10},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Check c;
        const auto t0 = Clock::now();
        try {
            criteria[k].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const bool ok = c.failures == 0;
        failed += !ok;
        std::printf("AC%zu: %s  %s (%.2f s)%s%s\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first, seconds_since(t0),
                    ok ? "" : "  -- ", c.why.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
