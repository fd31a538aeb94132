#pragma once

#include "qk3/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qk3 {

struct ZeroDimLimits {
    /// Largest degree at which the Hilbert function is evaluated.
    int max_degree = 12;
    /// Seed for the random linear forms used to separate points.
    std::uint64_t seed = 20240601;
    /// Number of random linear forms tried before giving up.
    int attempts = 8;
};

/// Zeros of a homogeneous system in P^(n-1) with coordinates in Q(i).
struct ZeroDimResult {
    /// Degree of the zero scheme, once the Hilbert function is seen to be
    /// constant (Gotzmann persistence).
    std::optional<std::size_t> scheme_degree;
    /// Degree at which the quotient ring was cut out.
    int degree_used = 0;
    /// Verified zeros, sorted.
    std::vector<ProjPoint> points;
    /// True when `points` is provably the whole zero set.
    bool complete = false;
    std::string detail;
};

/// dim_C of the degree-d part of C[x]/(gens).
std::size_t hilbert_function(std::span<const HomPoly> gens, int degree);

ZeroDimResult solve_zero_dimensional(std::span<const HomPoly> gens, const ZeroDimLimits& limits = {});

}  // namespace qk3
