#pragma once

#include "qdc/matrix.hpp"

namespace qdc {

// Basis conventions used throughout: single-qubit storage order (|1>, |0>),
// two-qubit storage order (|11>, |10>, |01>, |00>) with qubit 1 as the major
// index, so two-qubit index = 2*idx(q1) + idx(q2). The raising/lowering
// operators are sigma_plus = |1><0|, sigma_minus = |0><1|.

/// Storage index of the single-qubit basis state |b>, b in {0,1}.
inline int qubit_index(int b) { return 1 - b; }

/// Storage index of |ab>.
inline int two_qubit_index(int a, int b) { return 2 * qubit_index(a) + qubit_index(b); }

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Single-qubit basis ket |b>.
Vector qubit_ket(int b);

/// Two-qubit basis ket |ab>.
Vector two_qubit_ket(int a, int b);

/// (|01> + s e^{i phi} |10>)/sqrt(2) for s = +-1; phi = 0 gives the EPR
/// states |Psi+-| of the XXZ model, phi = arctan D the |+-> states of the
/// DM model.
Vector epr_ket(int sign, double phi = 0.0);

} // namespace qdc
