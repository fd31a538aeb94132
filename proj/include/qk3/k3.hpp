#pragma once

#include "qk3/galois.hpp"
#include "qk3/geometry.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qk3 {

struct NoMatchingType : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Action on the holomorphic 2-form, det(M)/lambda.
GaussianRational symplectic_character(const SmoothQuartic& s, const LinearAuto& m);

struct FixedCurve {
    int genus = 0;
    bool smooth = true;
};

/// Fixed points of M on S, read off the eigenspaces of M.
struct FixedLocus {
    std::vector<GaussianRational> eigenvalues;  ///< one per section
    std::vector<CurveSection> sections;
    std::vector<FixedCurve> curves;
    int isolated_points = 0;

    int rational_curves() const;
};

struct FixedLocusReport : FixedLocus {
    /// Absent when M^2 is scalar.
    std::optional<FixedLocus> sigma_squared;
    /// Pairs of fixed curves of M^2 exchanged by M.
    int a_count = 0;
};

/// Throws UnsupportedInput when M is scalar or a fixed plane meets S in a
/// singular curve.
FixedLocusReport fixed_locus(const SmoothQuartic& s, const LinearAuto& m);

enum class AutoKind { symplectic, purely_ns4, npns };
const char* to_string(AutoKind k);

struct AutomorphismType {
    AutoKind kind = AutoKind::symplectic;
    GaussianRational character;
    /// (r,k,a,g) for purely non-symplectic, (r,l,n) for npns, empty otherwise.
    std::vector<int> tuple;
    int n = 0;
    int a = 0;
    std::vector<FixedCurve> curves;
    /// Where r comes from: it is looked up, never computed.
    std::string table_source;
};

/// Throws NoMatchingType if the data fits no row of the tables.
AutomorphismType classify(const SmoothQuartic& s, const LinearAuto& m);
/// Classification of already computed fixed-locus data.
AutomorphismType classify(const FixedLocusReport& report, const GaussianRational& character);

/// 2 g_top - 2 = degree (2 g_base - 2) + ramification.
bool hurwitz_check(long g_top, long g_base, long degree, long ramification);
/// Ramification making the formula hold; nullopt if it would be negative.
std::optional<long> solve_m(long g_top, long g_base, long degree = 2);

/// Parameter count minus the centralizer dimension of the matrices; throws
/// std::invalid_argument("family not generically free") when negative.
long moduli_dimension(long family_monomial_count, std::span<const Matrix> automorphisms);
long npns_moduli_dim(long l);

}  // namespace qk3
