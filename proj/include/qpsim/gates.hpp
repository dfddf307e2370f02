// Copyright 2026 The qpsim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>

#include "qpsim/types.hpp"

namespace qpsim {

/// Square complex matrix acting on a register of qubits; dim is a power of
/// two. Used for gates, projectors, POVM elements and Kraus operators alike.
struct Operator {
    int dim = 0;
    Matrix mat;

    bool is_unitary(double tol = kInvariantTol) const;
    bool is_hermitian(double tol = kInvariantTol) const;
    bool is_psd(double tol = kInvariantTol) const;
    bool is_projector(double tol = kInvariantTol) const;
};

/// Validates shape (square, power-of-two dimension, finite entries).
Operator make_operator(const Matrix& mat);

Operator identity(int dim);
Operator pauli_x();
Operator pauli_z();

/// Controlled-NOT; the first (most significant) qubit is the control.
Operator cnot();

/// Receiver-side correction for a Bell-type outcome: Z^phase * X^flip.
/// The flip bit distinguishes the swapped branches, the phase bit the sign.
Operator pauli_correction(int flip_bit, int phase_bit);

/// Outcome index 0..3 read as two bits (flip, phase): 00, 01, 10, 11.
Operator pauli_correction(int bell_index);
std::string correction_name(int bell_index);

/// Rank-1 projectors onto |x+> = (|0>+|1>)/sqrt(2) and |x-> = (|0>-|1>)/sqrt(2).
std::pair<Operator, Operator> x_basis();

Operator projector_onto(const Vector& v);

}  // namespace qpsim
