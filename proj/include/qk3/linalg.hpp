#pragma once

#include "qk3/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qk3 {

/// Reduced row echelon form with the pivot column of each nonzero row.
/// Pivots are chosen deterministically: for each column left to right, the
/// first remaining row with a nonzero entry.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
    /// Columns without a pivot, ascending.
    std::vector<std::size_t> free_columns() const;
};

/// Gauss-Jordan elimination; the row updates for each pivot run in parallel.
Echelon row_reduce(Matrix m);
/// Serial reference for `row_reduce`; produces an identical result.
Echelon row_reduce_serial(Matrix m);

std::size_t rank(const Matrix& m);
std::size_t rank_serial(const Matrix& m);

/// Basis of the right kernel read off the RREF: one vector per free column,
/// with a 1 in that column and zeros in the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);
std::vector<Vector> kernel_basis(const Echelon& e);

GaussianRational determinant(Matrix m);
Matrix inverse(const Matrix& m);

/// Dimension of {B in gl_n : B*M = M*B for every M} for n x n matrices.
/// An empty list gives n*n with n = 4.
std::size_t centralizer_dimension(std::span<const Matrix> mats);

}  // namespace qk3
