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

#include "qpsim/gates.hpp"

#include <cmath>

#include "qpsim/errors.hpp"

namespace qpsim {

namespace {

bool power_of_two(Eigen::Index n) { return n >= 1 && (n & (n - 1)) == 0; }

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

bool Operator::is_unitary(double tol) const {
    return max_abs(mat.adjoint() * mat - Matrix::Identity(dim, dim)) <= tol;
}

bool Operator::is_hermitian(double tol) const { return max_abs(mat - mat.adjoint()) <= tol; }

bool Operator::is_psd(double tol) const {
    if (!is_hermitian(tol)) {
        return false;
    }
    if (dim == 2) {
        // Closed-form smallest eigenvalue of a 2x2 Hermitian matrix.
        const double a = mat(0, 0).real();
        const double d = mat(1, 1).real();
        const double off = std::abs(mat(0, 1));
        const double disc = std::sqrt((a - d) * (a - d) + 4.0 * off * off);
        return (a + d - disc) / 2.0 >= -tol;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es((mat + mat.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff() >= -tol;
}

bool Operator::is_projector(double tol) const {
    return is_hermitian(tol) && max_abs(mat * mat - mat) <= tol;
}

Operator make_operator(const Matrix& mat) {
    if (mat.rows() != mat.cols() || !power_of_two(mat.rows())) {
        throw BadShapeError("operator must be square with power-of-two dimension");
    }
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        for (Eigen::Index j = 0; j < mat.cols(); ++j) {
            if (!std::isfinite(mat(i, j).real()) || !std::isfinite(mat(i, j).imag())) {
                throw BadShapeError("operator has non-finite entries");
            }
        }
    }
    return Operator{static_cast<int>(mat.rows()), mat};
}

Operator identity(int dim) { return Operator{dim, Matrix::Identity(dim, dim)}; }

Operator pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Operator{2, m};
}

Operator pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return Operator{2, m};
}

Operator cnot() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;  // |00> -> |00>
    m(1, 1) = 1;  // |01> -> |01>
    m(2, 3) = 1;  // |11> -> |10>
    m(3, 2) = 1;  // |10> -> |11>
    return Operator{4, m};
}

Operator pauli_correction(int flip_bit, int phase_bit) {
    Matrix m = Matrix::Identity(2, 2);
    if (flip_bit) {
        m = pauli_x().mat * m;
    }
    if (phase_bit) {
        m = pauli_z().mat * m;
    }
    return Operator{2, m};
}

Operator pauli_correction(int bell_index) {
    if (bell_index < 0 || bell_index > 3) {
        throw BadShapeError("Bell outcome index must be in 0..3");
    }
    return pauli_correction((bell_index >> 1) & 1, bell_index & 1);
}

std::string correction_name(int bell_index) {
    static const char* names[] = {"I", "Z", "X", "ZX"};
    if (bell_index < 0 || bell_index > 3) {
        throw BadShapeError("Bell outcome index must be in 0..3");
    }
    return names[bell_index];
}

std::pair<Operator, Operator> x_basis() {
    Matrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    minus << 0.5, -0.5, -0.5, 0.5;
    return {Operator{2, plus}, Operator{2, minus}};
}

Operator projector_onto(const Vector& v) {
    if (!power_of_two(v.size())) {
        throw BadShapeError("projector basis vector must have power-of-two dimension");
    }
    const double n = v.norm();
    if (n <= 0.0) {
        throw ZeroNormError("cannot project onto a null vector");
    }
    Vector u = v / n;
    return Operator{static_cast<int>(u.size()), u * u.adjoint()};
}

}  // namespace qpsim
