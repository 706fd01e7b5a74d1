#pragma once

#include "symrep/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace symrep {

/// Small dense square-ish matrix over an exact or floating scalar.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    out(i, j) += a * other(k, j);
                }
            }
        }
        return out;
    }

    Matrix operator+(const Matrix& other) const {
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& other) const {
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    T trace() const {
        T sum(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) sum += (*this)(i, i);
        return sum;
    }

    std::size_t nonzeros_in_row(std::size_t i) const {
        std::size_t count = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != T(0)) ++count;
        return count;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline double max_abs_diff(const Matrix<double>& a, const Matrix<double>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::fabs(a(i, j) - b(i, j)));
    return worst;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

} // namespace symrep
