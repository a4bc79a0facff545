#include "qdc/matrix.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace qdc {

Matrix::Matrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
    assert(dim > 0);
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Matrix Matrix::conjugate() const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool Matrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool Matrix::all_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    assert(dim_ == o.dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    assert(dim_ == o.dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (Complex& z : a_) z *= s;
    return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
    assert(dim_ == o.dim_);
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const int da = a.dim(), db = b.dim();
    Matrix r(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) r(i * db + k, j * db + l) = aij * b(k, l);
        }
    return r;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    assert(a.dim() == b.dim());
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

Vector matvec(const Matrix& m, const Vector& v) {
    assert(static_cast<int>(v.size()) == m.dim());
    Vector r(v.size(), 0.0);
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

Matrix outer(const Vector& v) {
    Matrix r(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r(static_cast<int>(i), static_cast<int>(j)) = v[i] * std::conj(v[j]);
    return r;
}

Complex inner(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace qdc
