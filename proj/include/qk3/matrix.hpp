#pragma once

#include "qk3/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qk3 {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const GaussianRational> d);
    static Matrix diagonal(std::initializer_list<GaussianRational> d);
    /// Matrix whose columns are the given vectors (all of equal length).
    static Matrix from_columns(std::span<const Vector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<GaussianRational> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const GaussianRational> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& s, const Matrix& m);
    friend Vector operator*(const Matrix& m, std::span<const GaussianRational> v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    Matrix power(unsigned k) const;

    /// Row-major tokens, rows separated by "; ".
    std::string to_string() const;
    /// Row-major list of entries in canonical text form.
    std::vector<std::string> entry_strings() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> a_;
};

/// Parses `n*n` whitespace-separated Gaussian-rational tokens in row-major order.
Matrix parse_square_matrix(std::string_view text, std::size_t n = 4);

}  // namespace qk3
