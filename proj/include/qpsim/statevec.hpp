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
#include <vector>

#include "qpsim/errors.hpp"
#include "qpsim/gates.hpp"
#include "qpsim/types.hpp"

namespace qpsim {

/// Pure state of n labelled qubits.
///
/// Index convention: bit k of a basis index, counted from the most
/// significant bit of the n-bit index, is the computational value of qubit
/// labels[k]. So on labels {"A","B"} the ket |01> sits at index 1, matching
/// the left-to-right reading of ket notation.
///
/// All free functions below are pure: they never mutate their inputs.
struct StateVector {
    int n_qubits = 0;
    Vector amps;
    std::vector<std::string> labels;

    double norm() const { return amps.norm(); }
    bool has_label(const std::string& label) const;
    /// Position of a label in the register; throws UnknownLabelError.
    int label_pos(const std::string& label) const;
};

/// Builds a normalized state from raw amplitudes.
/// Throws BadShapeError unless len == 2^|labels|, ZeroNormError when the
/// input is numerically null, DuplicateLabelError on repeated labels.
StateVector make_state(const Vector& amps, std::vector<std::string> labels);

StateVector single_qubit(Complex a, Complex b, const std::string& label);
StateVector basis_state(std::size_t index, std::vector<std::string> labels);

/// Kronecker product; labels are concatenated (a's first).
StateVector tensor(const StateVector& a, const StateVector& b);

/// Applies op on the listed target qubits (identity elsewhere). The matrix
/// rows/columns are indexed by the target list in the given order, most
/// significant first. The result is not renormalized, so projectors and
/// Kraus operators can be applied directly.
StateVector apply_operator(const StateVector& s, const Operator& op,
                           const std::vector<std::string>& targets);

/// <a|b>; requires identical label lists in identical order.
Complex inner(const StateVector& a, const StateVector& b);

/// |<a|b>|^2, clamped to [0, 1].
double fidelity_pure(const StateVector& a, const StateVector& b);

struct DensityMatrix {
    int n_qubits = 0;
    Matrix mat;
    std::vector<std::string> labels;

    /// Hermitian, unit trace and positive semidefinite within tol.
    bool is_valid(double tol = kInvariantTol) const;
    double purity() const;
};

/// Partial trace over the complement of `keep` (row/column bits follow the
/// order of `keep`, most significant first).
DensityMatrix reduced_density(const StateVector& s, const std::vector<std::string>& keep);

DensityMatrix pure_density(const StateVector& s);

/// <phi|rho|phi>; labels must match.
double expectation(const DensityMatrix& rho, const StateVector& phi);

/// Isometry onto an orthonormal two-vector subspace of the `targets`
/// subsystem: the target qubits collapse into one fresh qubit whose |0>,|1>
/// coordinates are the components along basis0 and basis1. The input must
/// lie in the subspace (as post-projection states do); checked within
/// construction tolerance. The fresh label is appended last.
StateVector contract_subspace(const StateVector& s, const std::vector<std::string>& targets,
                              const Vector& basis0, const Vector& basis1,
                              const std::string& new_label);

/// Recovers the pure state of one qubit that is unentangled with the rest
/// of the register. Throws when the marginal is mixed.
StateVector extract_qubit(const StateVector& s, const std::string& label);

}  // namespace qpsim
