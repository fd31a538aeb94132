#include "qk3/linalg.hpp"

#include <omp.h>

#include <stdexcept>
#include <utility>

namespace qk3 {

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < rref.cols(); ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = m.row(a);
    auto rb = m.row(b);
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(ra[c], rb[c]);
}

// Scales row r so that its entry in column col becomes 1; returns the list of
// nonzero columns of the normalized row (all >= col).
std::vector<std::size_t> normalize_pivot_row(Matrix& m, std::size_t r, std::size_t col) {
    auto row = m.row(r);
    GaussianRational inv = row[col].inverse();
    std::vector<std::size_t> nz;
    for (std::size_t c = col; c < m.cols(); ++c) {
        if (row[c].is_zero()) continue;
        if (c == col) {
            row[c] = 1;
        } else {
            row[c] *= inv;
        }
        nz.push_back(c);
    }
    return nz;
}

}  // namespace

Echelon row_reduce(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    for (std::size_t col = 0; col < cols && cur < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t r = cur; r < rows; ++r)
            if (!m(r, col).is_zero()) {
                found = r;
                break;
            }
        if (found == rows) continue;
        swap_rows(m, cur, found);
        const std::vector<std::size_t> nz = normalize_pivot_row(m, cur, col);
        const auto pivot_row = m.row(cur);
        const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic, 4)
        for (long long rr = 0; rr < nrows; ++rr) {
            const auto r = static_cast<std::size_t>(rr);
            if (r == cur) continue;
            auto row = m.row(r);
            if (row[col].is_zero()) continue;
            const GaussianRational factor = row[col];
            for (std::size_t c : nz) row[c].sub_mul(factor, pivot_row[c]);
        }
        pivots.push_back(col);
        ++cur;
    }
    return {std::move(m), std::move(pivots)};
}

Echelon row_reduce_serial(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    for (std::size_t col = 0; col < m.cols() && cur < m.rows(); ++col) {
        std::size_t found = cur;
        while (found < m.rows() && m(found, col).is_zero()) ++found;
        if (found == m.rows()) continue;
        swap_rows(m, cur, found);
        GaussianRational inv = m(cur, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(cur, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == cur || m(r, col).is_zero()) continue;
            GaussianRational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(cur, c);
        }
        pivots.push_back(col);
        ++cur;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }
std::size_t rank_serial(const Matrix& m) { return row_reduce_serial(m).rank(); }

std::vector<Vector> kernel_basis(const Echelon& e) {
    std::vector<Vector> basis;
    const std::size_t cols = e.rref.cols();
    for (std::size_t f : e.free_columns()) {
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> kernel_basis(const Matrix& m) { return kernel_basis(row_reduce(m)); }

GaussianRational determinant(Matrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    GaussianRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = col;
        while (found < n && m(found, col).is_zero()) ++found;
        if (found == n) return GaussianRational(0);
        if (found != col) {
            swap_rows(m, col, found);
            det = -det;
        }
        det *= m(col, col);
        GaussianRational inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            GaussianRational factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c).sub_mul(factor, m(col, c));
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

std::size_t centralizer_dimension(std::span<const Matrix> mats) {
    const std::size_t n = mats.empty() ? 4 : mats.front().rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("centralizer needs square matrices of one size");
    if (mats.empty()) return n * n;
    Matrix system(mats.size() * n * n, n * n);
    std::size_t eq = 0;
    for (const auto& m : mats) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c, ++eq)
                for (std::size_t k = 0; k < n; ++k) {
                    // (B M)_{rc} - (M B)_{rc}
                    system(eq, r * n + k) += m(k, c);
                    system(eq, k * n + c) -= m(r, k);
                }
    }
    return n * n - rank(system);
}

}  // namespace qk3
