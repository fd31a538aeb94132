// qk3: command-line front end for the quartic surface toolkit.

#include "qk3/linalg.hpp"
#include "qk3/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qk3;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_error = 1;
constexpr int exit_no = 2;

struct Config {
    std::string format = "text";
    ZeroDimLimits limits;
};

// "@path" reads the argument from a file.
std::string resolve(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HomPoly read_surface(const std::string& arg) { return parse_polynomial(resolve(arg), 4, 4); }
Matrix read_matrix(const std::string& arg) { return parse_square_matrix(resolve(arg), 4); }
ProjPoint read_point(const std::string& arg) { return ProjPoint::parse(resolve(arg)); }

std::string matrix_text(const Matrix& m) {
    std::string out;
    for (const auto& s : m.entry_strings()) out += (out.empty() ? "" : " ") + s;
    return out;
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
    if (cfg.format == "json") std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

std::string galois_text(const GaloisReport& r) {
    std::ostringstream os;
    os << "normal form: " << to_string(r.normal_form) << '\n'
       << "completeness: " << to_string(r.completeness) << '\n'
       << "points: " << r.points.size() << '\n';
    for (const auto& p : r.points)
        os << "  " << p.point.to_string() << "  generator [" << matrix_text(p.generator.matrix)
           << "] multiplier " << p.generator.multiplier.to_string() << '\n';
    if (!r.detail.empty()) os << "detail: " << r.detail << '\n';
    return os.str();
}

std::string locus_text(const FixedLocus& f, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t k = 0; k < f.sections.size(); ++k) {
        const auto& s = f.sections[k];
        os << indent << "eigenvalue " << f.eigenvalues[k].to_string() << ": " << to_string(s.kind);
        if (s.kind == CurveSection::Kind::plane_quartic)
            os << (s.smooth ? ", smooth, genus " + std::to_string(*s.genus) : ", singular");
        else if (s.kind != CurveSection::Kind::line_in_surface)
            os << ", " << s.point_count << " point(s) on S";
        os << '\n';
    }
    os << indent << "curves: " << f.curves.size() << ", rational: " << f.rational_curves()
       << ", isolated points: " << f.isolated_points << '\n';
    return os.str();
}

std::string type_text(const AutomorphismType& t) {
    std::ostringstream os;
    os << "character: " << to_string(t.kind) << " (" << t.character.to_string() << ")\n";
    if (!t.tuple.empty()) {
        os << (t.kind == AutoKind::npns ? "(r,l,n) = (" : "(r,k,a,g) = (");
        for (std::size_t k = 0; k < t.tuple.size(); ++k) os << (k ? "," : "") << t.tuple[k];
        os << ")\n";
    }
    os << "n = " << t.n << ", a = " << t.a << ", curves = " << t.curves.size() << '\n';
    os << "r source: " << t.table_source << '\n';
    return os.str();
}

Matrix diag_i(std::initializer_list<int> pattern) {
    Matrix m = Matrix::identity(4);
    std::size_t k = 0;
    for (int p : pattern) {
        if (p == 1) m(k, k) = GaussianRational::i();
        if (p == -1) m(k, k) = -GaussianRational::i();
        ++k;
    }
    return m;
}

int run_demo(const Config& cfg) {
    Json log = Json::array();
    bool all_ok = true;
    auto check = [&](const std::string& what, bool ok) {
        all_ok = all_ok && ok;
        log.push_back({{"case", what}, {"ok", ok}});
        if (cfg.format != "json") std::cout << (ok ? "ok    " : "FAIL  ") << what << '\n';
    };

    const SmoothQuartic fermat(parse_polynomial("X^4+Y^4+Z^4+W^4", 4));
    const SmoothQuartic form1(parse_polynomial("X^4+Y^4+Z^4+W^4+Y^2*Z*W", 4));
    const SmoothQuartic form2(parse_polynomial("X^4+Y^4+Z^4+Z*W^3+W^4", 4));

    const auto all = enumerate_outer_galois_points(fermat, {}, cfg.limits);
    check("Fermat quartic has 4 outer Galois points, proved complete",
          all.points.size() == 4 && all.completeness == Completeness::proved_complete);
    check("Fermat generators are the diagonal homologies", [&] {
        for (std::size_t k = 0; k < all.points.size(); ++k) {
            Matrix d = Matrix::identity(4);
            d(k, k) = GaussianRational::i();
            if (all.points[k].generator.matrix != d) return false;
        }
        return all.points.size() == 4;
    }());

    const auto r1 = recognize_normal_form(form1, cfg.limits);
    check("X^4+F4(Y,Z,W) is form-1 with the single point [1:0:0:0]",
          r1.normal_form == NormalForm::form1 && r1.points.size() == 1 &&
              r1.points[0].point == ProjPoint::coordinate(0));
    const auto s1 = LinearAuto::for_surface(form1.poly(), diag_i({1, 0, 0, 0}));
    const auto t1 = classify(form1, s1);
    check("sigma_1 on form-1 is purely non-symplectic of type (1,0,0,3)",
          t1.kind == AutoKind::purely_ns4 && t1.tuple == std::vector<int>{1, 0, 0, 3});

    const auto r2 = recognize_normal_form(form2, cfg.limits);
    check("X^4+Y^4+F4(Z,W) is form-2 with two points", r2.normal_form == NormalForm::form2 && r2.points.size() == 2);
    const auto s12 = LinearAuto::for_surface(form2.poly(), diag_i({1, 1, 0, 0}));
    const auto t2 = classify(form2, s12);
    check("sigma_1 sigma_2 on form-2 is non-purely non-symplectic of type (10,4,8)",
          t2.kind == AutoKind::npns && t2.tuple == std::vector<int>{10, 4, 8});

    const auto sym = LinearAuto::for_surface(fermat.poly(), diag_i({1, -1, 0, 0}));
    check("characters i, -1, 1", symplectic_character(form1, s1) == GaussianRational::i() &&
                                     symplectic_character(form2, s12) == GaussianRational(-1) &&
                                     symplectic_character(fermat, sym) == GaussianRational(1));

    const std::vector<Matrix> pair{diag_i({1, 0, 0, 0}), diag_i({0, 1, 0, 0})};
    check("moduli dimension 7 - 6 = 1", moduli_dimension(7, pair) == 1);
    check("npns moduli dimension 4 - 2 = 2", npns_moduli_dim(4) == 2);
    check("Hurwitz: m is 0 or 4", solve_m(1, 1) == 0L && solve_m(1, 0) == 4L);

    const auto red = reduce_gram(GramMatrix2::from_entries(8, 8, 16));
    check("Gram (8 8 / 8 16) reduces to (8 0 / 0 8)", red.form == GramMatrix2::from_entries(8, 0, 8));

    if (cfg.format == "json") std::cout << Json{{"cases", log}, {"ok", all_ok}}.dump(2) << '\n';
    return all_ok ? exit_yes : exit_no;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for quartic surfaces: smoothness, Galois points, order-4 automorphisms"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-eliminant-degree", cfg.limits.max_degree, "Degree cap for exact point enumeration")
        ->check(CLI::Range(3, 40));
    app.add_option("--seed", cfg.limits.seed, "Seed for the random separating forms");

    int code = exit_yes;
    std::string surface, matrix_arg, point_arg;
    std::vector<std::string> candidates, matrices;

    auto* smooth = app.add_subcommand("smooth", "Decide smoothness of a quartic surface")->fallthrough();
    smooth->add_option("surface", surface, "Quartic in X,Y,Z,W or @file")->required();
    smooth->callback([&] {
        const bool ok = is_smooth_surface(read_surface(surface));
        emit(cfg, Json{{"smooth", ok}}, ok ? "smooth\n" : "singular\n");
        code = ok ? exit_yes : exit_no;
    });

    auto* galois = app.add_subcommand("galois", "Outer Galois points")->fallthrough()->require_subcommand(1);
    auto* gtest = galois->add_subcommand("test", "Test one point")->fallthrough();
    gtest->add_option("surface", surface)->required();
    gtest->add_option("--point", point_arg, "Colon-separated coordinates")->required();
    gtest->callback([&] {
        const SmoothQuartic s(read_surface(surface));
        const ProjPoint p = read_point(point_arg);
        const bool ok = is_outer_galois_point(s, p);
        Json j{{"point", to_json(p)}, {"outer_galois", ok}};
        std::string text = ok ? "true\n" : "false\n";
        if (ok) {
            const auto g = galois_generator(s, p);
            j["generator"] = to_json(g.matrix);
            j["multiplier"] = g.multiplier.to_string();
            text += "generator [" + matrix_text(g.matrix) + "]\n";
        }
        emit(cfg, j, text);
        code = ok ? exit_yes : exit_no;
    });
    auto* gfind = galois->add_subcommand("find", "Enumerate all outer Galois points")->fallthrough();
    gfind->add_option("surface", surface)->required();
    gfind->add_option("--candidate", candidates, "Extra point to test");
    gfind->callback([&] {
        const SmoothQuartic s(read_surface(surface));
        std::vector<ProjPoint> extra;
        for (const auto& c : candidates) extra.push_back(read_point(c));
        const auto r = enumerate_outer_galois_points(s, extra, cfg.limits);
        emit(cfg, to_json(r), galois_text(r));
    });
    auto* grec = galois->add_subcommand("recognize", "Match the syntactic normal forms")->fallthrough();
    grec->add_option("surface", surface)->required();
    grec->callback([&] {
        const auto r = recognize_normal_form(SmoothQuartic(read_surface(surface)), cfg.limits);
        emit(cfg, to_json(r), galois_text(r));
    });

    auto* autom = app.add_subcommand("auto", "Order-4 automorphisms")->fallthrough()->require_subcommand(1);
    auto add_auto = [&](const std::string& name, const std::string& help, auto action) {
        auto* sub = autom->add_subcommand(name, help)->fallthrough();
        sub->add_option("surface", surface)->required();
        sub->add_option("--matrix", matrix_arg, "16 entries, row-major, or @file")->required();
        sub->callback([&, action] {
            const SmoothQuartic s(read_surface(surface));
            action(s, LinearAuto::for_surface(s.poly(), read_matrix(matrix_arg)));
        });
    };
    add_auto("character", "Action on the 2-form", [&](const SmoothQuartic& s, const LinearAuto& m) {
        const auto u = symplectic_character(s, m);
        emit(cfg, Json{{"character", u.to_string()}}, u.to_string() + "\n");
    });
    add_auto("fixed-locus", "Fixed curves and points", [&](const SmoothQuartic& s, const LinearAuto& m) {
        const auto r = fixed_locus(s, m);
        std::string text = locus_text(r, "");
        if (r.sigma_squared) text += "square:\n" + locus_text(*r.sigma_squared, "  ");
        text += "a = " + std::to_string(r.a_count) + "\n";
        emit(cfg, to_json(r), text);
    });
    add_auto("classify", "Type tuple", [&](const SmoothQuartic& s, const LinearAuto& m) {
        const auto t = classify(s, m);
        emit(cfg, to_json(t), type_text(t));
    });

    std::vector<std::string> gram;
    auto* lattice = app.add_subcommand("lattice", "Even binary lattices")->fallthrough()->require_subcommand(1);
    auto gram_at = [&](std::size_t k) {
        return GramMatrix2::from_entries(BigInt(gram[k]), BigInt(gram[k + 1]), BigInt(gram[k + 2]));
    };
    auto* lreduce = lattice->add_subcommand("reduce", "Canonical form of g11 g12 g22")->fallthrough();
    lreduce->add_option("entries", gram)->expected(3)->required();
    lreduce->callback([&] {
        const auto r = reduce_gram(gram_at(0));
        const auto& u = r.transform;
        emit(cfg, to_json(r),
             r.form.to_string() + "\ntransform " + u[0][0].get_str() + " " + u[0][1].get_str() + " " +
                 u[1][0].get_str() + " " + u[1][1].get_str() + "\n");
    });
    auto* lcompare = lattice->add_subcommand("compare", "Isomorphism of two lattices")->fallthrough();
    lcompare->add_option("entries", gram)->expected(6)->required();
    lcompare->callback([&] {
        const bool iso = is_isomorphic(gram_at(0), gram_at(3));
        emit(cfg, Json{{"isomorphic", iso}}, iso ? "isomorphic\n" : "not isomorphic\n");
        code = iso ? exit_yes : exit_no;
    });

    long monomial_count = -1, npns_l = -1;
    std::string family;
    auto* moduli = app.add_subcommand("moduli", "Naive moduli counts")->fallthrough()->require_subcommand(1);
    auto* mdim = moduli->add_subcommand("dim", "Parameters minus centralizer dimension")->fallthrough();
    auto* count_opt = mdim->add_option("--monomials", monomial_count, "Number of family monomials");
    auto* family_opt = mdim->add_option("--family", family, "Polynomial whose monomials span the family");
    mdim->add_option("--matrix", matrices, "Symmetry matrix (repeatable)");
    auto* l_opt = mdim->add_option("--npns-l", npns_l, "l of an (r,l,n) type");
    count_opt->excludes(family_opt)->excludes(l_opt);
    family_opt->excludes(l_opt);
    mdim->callback([&] {
        if (*l_opt) {
            const long d = npns_moduli_dim(npns_l);
            emit(cfg, Json{{"l", npns_l}, {"moduli_dimension", d}}, std::to_string(d) + "\n");
            return;
        }
        if (!*family_opt && !*count_opt) throw CLI::ValidationError("moduli dim", "need --monomials, --family or --npns-l");
        const long count = *family_opt ? static_cast<long>(read_surface(family).term_count()) : monomial_count;
        std::vector<Matrix> ms;
        for (const auto& m : matrices) ms.push_back(read_matrix(m));
        const long central = static_cast<long>(centralizer_dimension(ms));
        const long d = moduli_dimension(count, ms);
        emit(cfg, Json{{"monomials", count}, {"centralizer_dimension", central}, {"moduli_dimension", d}},
             "centralizer dimension " + std::to_string(central) + "\nmoduli dimension " + std::to_string(d) + "\n");
    });

    app.add_subcommand("demo", "Replay the worked examples")->fallthrough()->callback([&] { code = run_demo(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return code;
}
