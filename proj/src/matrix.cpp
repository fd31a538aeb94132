#include "qk3/matrix.hpp"

#include <cctype>
#include <stdexcept>

namespace qk3 {

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

Matrix Matrix::diagonal(std::span<const GaussianRational> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
}

Matrix Matrix::diagonal(std::initializer_list<GaussianRational> d) {
    return diagonal(std::span<const GaussianRational>(d.begin(), d.size()));
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
    if (columns.empty()) return {};
    Matrix m(columns[0].size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows_) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= b.a_[k];
    return out;
}

Matrix operator*(const GaussianRational& s, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.a_) x *= s;
    return out;
}

Vector operator*(const Matrix& m, std::span<const GaussianRational> v) {
    if (v.size() != m.cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    return out;
}

Matrix Matrix::power(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("power of non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::vector<std::string> Matrix::entry_strings() const {
    std::vector<std::string> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(x.to_string());
    return out;
}

std::string Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) s += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) s += ' ';
            s += (*this)(r, c).to_string();
        }
    }
    return s;
}

Matrix parse_square_matrix(std::string_view text, std::size_t n) {
    std::vector<GaussianRational> entries;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';' ||
                                     text[pos] == ','))
            ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ';' &&
               text[pos] != ',')
            ++pos;
        try {
            entries.push_back(GaussianRational::parse(text.substr(start, pos - start)));
        } catch (const ParseError& e) {
            throw ParseError("bad matrix entry '" + std::string(text.substr(start, pos - start)) + "'",
                             start + e.position());
        }
    }
    if (entries.size() != n * n)
        throw ParseError("expected " + std::to_string(n * n) + " matrix entries, got " +
                             std::to_string(entries.size()),
                         text.size());
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = entries[r * n + c];
    return m;
}

}  // namespace qk3
