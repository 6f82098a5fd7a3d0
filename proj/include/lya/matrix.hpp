#pragma once

#include "lya/scalar.hpp"

#include <cstddef>
#include <vector>

namespace lya {

// Dense row-major rational matrix. A(i, j): row i is the output coordinate.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    void set_column(std::size_t j, const Vector& v);

    Vector apply(const Vector& v) const;
    Matrix operator*(const Matrix& b) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    Matrix scaled(const Scalar& s) const;
    // this += s * b
    void axpy(const Scalar& s, const Matrix& b);
    Matrix transpose() const;

    bool is_zero() const;
    bool operator==(const Matrix& b) const = default;

    const std::vector<Scalar>& data() const { return a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

// Block matrix [[a, b], [c, d]].
Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

}  // namespace lya
