#include "rbmkit/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace rbmkit {

void shape_error(const std::string& op, const std::string& detail) {
    throw std::invalid_argument(op + ": shape mismatch (" + detail + ")");
}

static std::string dims(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) shape_error("matmul", dims(a) + " * " + dims(b));
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double* oi = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) oi[j] += aik * bk[j];
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) shape_error("add", dims(a) + " vs " + dims(b));
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) shape_error("sub", dims(a) + " vs " + dims(b));
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

Matrix scale(const Matrix& a, double s) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= s;
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) shape_error("hadamard", dims(a) + " vs " + dims(b));
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= b.data()[i];
    return out;
}

Vector matvec(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size())
        shape_error("matvec", dims(a) + " * vec" + std::to_string(x.size()));
    Vector out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += ai[j] * x[j];
        out[i] = acc;
    }
    return out;
}

Vector tmatvec(const Matrix& a, const Vector& x) {
    if (a.rows() != x.size())
        shape_error("tmatvec", dims(a) + "^T * vec" + std::to_string(x.size()));
    Vector out(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += ai[j] * xi;
    }
    return out;
}

Matrix outer(const Vector& u, const Vector& v) {
    Matrix out(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
    return out;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        shape_error("dot", std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Vector vadd(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        shape_error("vadd", std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vector vsub(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        shape_error("vsub", std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vector vscale(const Vector& a, double s) {
    Vector out = a;
    for (double& x : out) x *= s;
    return out;
}

void axpy(double s, const Vector& x, Vector& y) {
    if (x.size() != y.size())
        shape_error("axpy", std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

void axpy(double s, const Matrix& x, Matrix& y) {
    if (!x.same_shape(y)) shape_error("axpy", dims(x) + " vs " + dims(y));
    for (std::size_t i = 0; i < x.size(); ++i) y.data()[i] += s * x.data()[i];
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a.data()[i]));
    return m;
}

double max_abs(const Vector& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::fabs(x));
    return m;
}

double sum(const Vector& a) {
    double acc = 0.0;
    for (double x : a) acc += x;
    return acc;
}

double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

Vector sigmoid(const Vector& x) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = sigmoid(x[i]);
    return out;
}

double log1p_exp(double x) {
    const double m = x > 0.0 ? x : 0.0;
    return m + std::log1p(std::exp(-std::fabs(x)));
}

Vector log1p_exp(const Vector& x) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = log1p_exp(x[i]);
    return out;
}

Matrix bernoulli_sample(const Matrix& p, RandomSource& rng) {
    Matrix out(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.size(); ++i)
        out.data()[i] = rng.bernoulli(p.data()[i]) ? 1.0 : 0.0;
    return out;
}

Vector bernoulli_sample(const Vector& p, RandomSource& rng) {
    Vector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = rng.bernoulli(p[i]) ? 1.0 : 0.0;
    return out;
}

} // namespace rbmkit
