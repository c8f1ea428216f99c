#pragma once

#include <cassert>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace paut {

/// Dense matrix over an exact scalar type.  The scalar must provide
/// +, -, *, ==, is_zero(), and a free function star() (the involution).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T &operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const T &operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool is_zero() const
    {
        for (const T &x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Matrix operator+(const Matrix &o) const
    {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix &o) const
    {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    Matrix operator*(const Matrix &o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T &a = (*this)(i, k);
                if (a.is_zero())
                    continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T &b = o(k, j);
                    if (b.is_zero())
                        continue;
                    r(i, j) += a * b;
                }
            }
        return r;
    }

    Matrix scaled(const T &c) const
    {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] * c;
        return r;
    }

    /// Conjugate transpose.
    Matrix adjoint() const
    {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = star((*this)(i, j));
        return r;
    }

    /// x^n with x^{-1} interpreted as the adjoint (partial isometry powers).
    Matrix isometry_power(int n) const
    {
        assert(rows_ == cols_);
        Matrix base = n >= 0 ? *this : adjoint();
        int k = n >= 0 ? n : -n;
        Matrix r = identity(rows_);
        for (int i = 0; i < k; ++i)
            r = r * base;
        return r;
    }

    bool operator==(const Matrix &o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix &o) const { return !(*this == o); }

    friend std::ostream &operator<<(std::ostream &os, const Matrix &m)
    {
        for (int i = 0; i < m.rows_; ++i) {
            os << "[ ";
            for (int j = 0; j < m.cols_; ++j)
                os << m(i, j) << " ";
            os << "]\n";
        }
        return os;
    }

private:
    void check_same_shape(const Matrix &o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> data_;
};

}  // namespace paut
