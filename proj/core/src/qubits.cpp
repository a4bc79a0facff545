#include "qdc/qubits.hpp"

#include <cmath>

namespace qdc {

Matrix pauli_x() {
    Matrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix pauli_y() {
    // Sign fixed by sigma_plus = (sigma_x + i sigma_y)/2 = |1><0|.
    Matrix m(2);
    m(qubit_index(0), qubit_index(1)) = Complex(0.0, 1.0);
    m(qubit_index(1), qubit_index(0)) = Complex(0.0, -1.0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2);
    m(qubit_index(0), qubit_index(0)) = 1.0;
    m(qubit_index(1), qubit_index(1)) = -1.0;
    return m;
}

Vector qubit_ket(int b) {
    Vector v(2, 0.0);
    v[qubit_index(b)] = 1.0;
    return v;
}

Vector two_qubit_ket(int a, int b) {
    Vector v(4, 0.0);
    v[two_qubit_index(a, b)] = 1.0;
    return v;
}

Vector epr_ket(int sign, double phi) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Vector v(4, 0.0);
    v[two_qubit_index(0, 1)] = inv_sqrt2;
    v[two_qubit_index(1, 0)] =
        static_cast<double>(sign) * inv_sqrt2 * std::exp(Complex(0.0, phi));
    return v;
}

} // namespace qdc
