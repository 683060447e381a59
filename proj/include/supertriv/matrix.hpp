#pragma once

#include "supertriv/rational.hpp"

#include <cstddef>
#include <vector>

namespace supertriv {

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational>& data() { return data_; }
    const std::vector<Rational>& data() const { return data_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;

    // columns selected by index list
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix column(std::size_t j) const;
    // horizontal / vertical concatenation
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// v^T * A for a row vector v (length A.rows()).
std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& a);

} // namespace supertriv
