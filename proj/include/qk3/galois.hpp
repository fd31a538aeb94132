#pragma once

#include "qk3/zero_dim.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qk3 {

struct SingularSurfaceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InnerPointError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A quartic surface whose smoothness has been checked on construction.
class SmoothQuartic {
public:
    /// Throws std::invalid_argument for a non-quartic, SingularSurfaceError if singular.
    explicit SmoothQuartic(HomPoly f);

    const HomPoly& poly() const noexcept { return f_; }

private:
    HomPoly f_;
};

/// M with M^4 = I and F o M = multiplier * F.
struct LinearAuto {
    Matrix matrix;
    GaussianRational multiplier;

    /// Throws std::invalid_argument if M^4 != I or M does not preserve F = 0.
    static LinearAuto for_surface(const HomPoly& f, Matrix m);
};

/// Polar condition: D_P F is the cube of a linear form iff the 4x10 matrix
/// of its partial derivatives has rank <= 1. Returns its 2x2 minors, which
/// are quadrics in the coordinates of P.
std::vector<HomPoly> galois_conditions(const HomPoly& f);

/// Basis completion {P, e_k (k != lead index of P)}.
bool is_outer_galois_point(const SmoothQuartic& s, const ProjPoint& p);
/// Same test with an explicit completion: three vectors with P spanning C^4.
bool is_outer_galois_point(const SmoothQuartic& s, const ProjPoint& p, std::span<const Vector> completion);

/// The homology of order 4 with center P; throws std::invalid_argument if P
/// is not an outer Galois point.
LinearAuto galois_generator(const SmoothQuartic& s, const ProjPoint& p);

enum class Completeness { proved_complete, candidates_only };
enum class NormalForm { form1, form2, form3, unrecognized };

const char* to_string(Completeness c);
const char* to_string(NormalForm f);

struct GaloisPoint {
    ProjPoint point;
    LinearAuto generator;
};

struct GaloisReport {
    HomPoly surface{4, 4};
    std::vector<GaloisPoint> points;  ///< sorted by point
    Completeness completeness = Completeness::candidates_only;
    NormalForm normal_form = NormalForm::unrecognized;
    std::string detail;
};

/// Variables occurring only in their own fourth power. Their number is 0, 1, 2
/// or 4 and determines the syntactic normal form.
std::vector<int> separated_variables(const HomPoly& f);

/// Syntactic match against aX^4 + F4(Y,Z,W), aX^4 + bY^4 + F4(Z,W) and
/// sum a_k X_k^4 up to permutation of variables. For the two partial forms
/// the listed points are reported complete only when the enumerator proves
/// the same set.
GaloisReport recognize_normal_form(const SmoothQuartic& s, const ZeroDimLimits& limits = {});

/// Tests the coordinate points and `extra` candidates, then solves the polar
/// conditions exactly.
GaloisReport enumerate_outer_galois_points(const SmoothQuartic& s, std::span<const ProjPoint> extra = {},
                                           const ZeroDimLimits& limits = {});

}  // namespace qk3
