#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbmkit/rng.hpp"

namespace rbmkit {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles. Values are immutable by convention once
// an operation has produced them; ops return fresh matrices.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    Vector row_copy(std::size_t i) const {
        return Vector(row(i), row(i) + cols_);
    }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

[[noreturn]] void shape_error(const std::string& op, const std::string& detail);

// --- linear algebra ---------------------------------------------------------

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
Matrix hadamard(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);    // A x
Vector tmatvec(const Matrix& a, const Vector& x);   // A^T x
Matrix outer(const Vector& u, const Vector& v);     // u v^T

double dot(const Vector& a, const Vector& b);
Vector vadd(const Vector& a, const Vector& b);
Vector vsub(const Vector& a, const Vector& b);
Vector vscale(const Vector& a, double s);

// y += s * x (shape-checked)
void axpy(double s, const Vector& x, Vector& y);
void axpy(double s, const Matrix& x, Matrix& y);

double max_abs(const Matrix& a);
double max_abs(const Vector& a);
double sum(const Vector& a);

// --- elementwise nonlinearities ---------------------------------------------

// Numerically stable logistic function: for x < 0 uses e^x / (1 + e^x).
double sigmoid(double x);
Vector sigmoid(const Vector& x);

// Stable softplus log(1 + e^x) = max(x, 0) + log1p(e^{-|x|}).
double log1p_exp(double x);
Vector log1p_exp(const Vector& x);

// Independent Bernoulli draws, entry (i,j) is 1 with probability p(i,j).
Matrix bernoulli_sample(const Matrix& p, RandomSource& rng);
Vector bernoulli_sample(const Vector& p, RandomSource& rng);

} // namespace rbmkit
