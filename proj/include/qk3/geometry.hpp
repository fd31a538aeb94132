#pragma once

#include "qk3/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qk3 {

/// Rows are g * m for each generator g and each monomial m of degree
/// `degree - deg(g)`; columns are the monomials of degree `degree`.
Matrix macaulay_matrix(std::span<const HomPoly> gens, int degree);

/// Smoothness of the hypersurface F = 0 decided at a chosen Macaulay degree:
/// true iff the partials generate everything in that degree.
bool smooth_at_degree(const HomPoly& f, int degree);

/// Smoothness at the regularity bound n(d-2)+1 for d = deg F in n variables.
bool is_smooth_hypersurface(const HomPoly& f);

/// Quartic surface in P^3 (Macaulay degree 9).
bool is_smooth_surface(const HomPoly& f);
/// Quartic curve in P^2 (Macaulay degree 7).
bool is_smooth_plane_quartic(const HomPoly& f);

/// Fourth roots of unity in the fixed order 1, -1, i, -i.
const std::vector<GaussianRational>& fourth_roots_of_unity();

struct EigenSpace {
    GaussianRational eigenvalue;
    std::vector<Vector> basis;
};

/// Eigenspaces of an M with M^4 = I, in the order of `fourth_roots_of_unity`,
/// empty ones omitted.
struct EigenDecomposition {
    std::vector<EigenSpace> spaces;
};

/// Throws std::invalid_argument("unnormalized automorphism ...") unless M^4 = I.
EigenDecomposition eigen_decompose_order4(const Matrix& m);

/// Intersection of S = {F = 0} with a linear subspace given by a basis.
struct CurveSection {
    enum class Kind { point, finite_points, line_in_surface, plane_quartic };

    Kind kind = Kind::point;
    std::vector<Vector> ambient;
    HomPoly form{1, 4};  ///< F restricted to the subspace, in basis coordinates
    bool smooth = true;
    std::optional<int> genus;  ///< curves only; unset for singular plane quartics
    int point_count = 0;       ///< isolated points of S in the subspace
};

const char* to_string(CurveSection::Kind kind);

/// Throws for an empty basis, for the whole space, and for a plane contained
/// in S (impossible on a smooth quartic).
CurveSection section(const HomPoly& f, std::span<const Vector> basis);

}  // namespace qk3
