#pragma once

#include <complex>
#include <vector>

namespace qdc {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense square complex matrix, row-major. Dimensions 2 and 4 are all this
/// library ever builds, but the arithmetic is dimension-agnostic.
class Matrix {
public:
    explicit Matrix(int dim);

    static Matrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * dim_ + c];
    }

    Matrix adjoint() const;
    Matrix conjugate() const;

    Complex trace() const;
    double max_abs() const;
    bool is_hermitian(double tol = 1e-12) const;
    bool all_finite() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(Complex s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    Matrix operator*(const Matrix& o) const;

private:
    int dim_;
    std::vector<Complex> a_;
};

/// Kronecker product; result dimension dim(a)*dim(b). The first factor is
/// the major index, so kron(u, v) acts with u on qubit 1.
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);

Vector matvec(const Matrix& m, const Vector& v);

/// |v><v| without normalization.
Matrix outer(const Vector& v);

Complex inner(const Vector& a, const Vector& b);

} // namespace qdc
