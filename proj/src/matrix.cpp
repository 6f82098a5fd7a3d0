#include "lya/matrix.hpp"

#include "lya/errors.hpp"

namespace lya {

Matrix Matrix::identity(std::size_t n)
{
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
    return r;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix r(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) r(i, j) = rows[i][j];
    }
    return r;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vector& v)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& x = (*this)(i, j);
            if (sgn(x) != 0) r[i] += x * v[j];
        }
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& b) const
{
    if (cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix& Matrix::operator+=(const Matrix& b)
{
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& b)
{
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
    return *this;
}

Matrix Matrix::operator+(const Matrix& b) const
{
    Matrix r = *this;
    r += b;
    return r;
}

Matrix Matrix::operator-(const Matrix& b) const
{
    Matrix r = *this;
    r -= b;
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

void Matrix::axpy(const Scalar& s, const Matrix& b)
{
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix axpy size mismatch");
    if (sgn(s) == 0) return;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (sgn(b.a_[k]) != 0) a_[k] += s * b.a_[k];
}

Matrix Matrix::transpose() const
{
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d)
{
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw DimensionMismatch("block matrix shapes do not fit");
    Matrix r(a.rows() + c.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) r(a.rows() + i, j) = c(i, j);
        for (std::size_t j = 0; j < d.cols(); ++j) r(a.rows() + i, c.cols() + j) = d(i, j);
    }
    return r;
}

}  // namespace lya
