#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/error.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyomega {

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<BigRat>;

/// Dense column-major matrix with explicit dimensions.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Row-wise literal, e.g. Matrix<BigInt>::from_rows({{2, 6}, {-2, 2}}).
    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(r, c);
        std::size_t i = 0;
        for (const auto &row : rows) {
            if (row.size() != c)
                throw DimensionError("ragged row in matrix literal");
            std::size_t j = 0;
            for (const auto &x : row)
                m(i, j++) = x;
            ++i;
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>> &columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            m.set_column(j, columns[j]);
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<const T> column_view(std::size_t c) const {
        return {data_.data() + c * rows_, rows_};
    }
    std::span<T> column_view(std::size_t c) { return {data_.data() + c * rows_, rows_}; }

    std::vector<T> column(std::size_t c) const {
        auto v = column_view(c);
        return {v.begin(), v.end()};
    }

    std::vector<T> row(std::size_t r) const {
        std::vector<T> out(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            out[c] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, std::span<const T> v) {
        if (v.size() != rows_)
            throw DimensionError("column length " + std::to_string(v.size()) +
                                 " does not match row count " + std::to_string(rows_));
        std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(c * rows_));
    }
    void set_column(std::size_t c, const std::vector<T> &v) { set_column(c, std::span<const T>(v)); }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_columns(std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    const std::vector<T> &data() const noexcept { return data_; }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<BigInt>;
using RatMat = Matrix<BigRat>;

template <class T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (b(k, j) == 0)
                continue;
            for (std::size_t i = 0; i < a.rows(); ++i)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T> &a, const std::vector<T> &x) {
    if (a.cols() != x.size())
        throw DimensionError("matrix-vector product: " + std::to_string(a.cols()) +
                             " columns vs vector of length " + std::to_string(x.size()));
    std::vector<T> out(a.rows());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (x[k] == 0)
            continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            out[i] += a(i, k) * x[k];
    }
    return out;
}

/// Exact conversion of an integer matrix to a rational one.
RatMat to_rational(const IntMat &m);
RatVec to_rational(const IntVec &v);

/// V·x for integer V and rational x.
RatVec apply_rational(const IntMat &v, const RatVec &x);

template <class T>
std::ostream &operator<<(std::ostream &os, const Matrix<T> &m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
}

} // namespace polyomega
