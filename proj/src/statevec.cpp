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

#include "qpsim/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>

namespace qpsim {

namespace {

void check_distinct_labels(const std::vector<std::string>& labels) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw DuplicateLabelError("duplicate qubit label: " + l);
        }
    }
}

void check_finite(const Vector& amps) {
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        if (!std::isfinite(amps[i].real()) || !std::isfinite(amps[i].imag())) {
            throw BadShapeError("non-finite amplitude at index " + std::to_string(i));
        }
    }
}

// Bit shifts of the given target labels within the basis index; labels[k]
// owns bit (n-1-k) counted from the least significant end.
std::vector<int> target_shifts(const StateVector& s, const std::vector<std::string>& targets) {
    if (targets.empty()) {
        throw DimensionMismatchError("target list is empty");
    }
    check_distinct_labels(targets);
    std::vector<int> shifts;
    shifts.reserve(targets.size());
    for (const auto& t : targets) {
        shifts.push_back(s.n_qubits - 1 - s.label_pos(t));
    }
    return shifts;
}

}  // namespace

bool StateVector::has_label(const std::string& label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

int StateVector::label_pos(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw UnknownLabelError("unknown qubit label: " + label);
    }
    return static_cast<int>(it - labels.begin());
}

StateVector make_state(const Vector& amps, std::vector<std::string> labels) {
    if (labels.empty()) {
        throw BadShapeError("a state needs at least one labelled qubit");
    }
    const auto expected = Eigen::Index{1} << labels.size();
    if (amps.size() != expected) {
        throw BadShapeError("amplitude count " + std::to_string(amps.size()) +
                            " does not match 2^" + std::to_string(labels.size()) + " labels");
    }
    check_distinct_labels(labels);
    check_finite(amps);
    const double n = amps.norm();
    if (n < kConstructTol) {
        throw ZeroNormError("state has (numerically) zero norm");
    }
    StateVector s;
    s.n_qubits = static_cast<int>(labels.size());
    s.amps = amps / n;
    s.labels = std::move(labels);
    return s;
}

StateVector single_qubit(Complex a, Complex b, const std::string& label) {
    Vector v(2);
    v << a, b;
    return make_state(v, {label});
}

StateVector basis_state(std::size_t index, std::vector<std::string> labels) {
    const std::size_t dim = std::size_t{1} << labels.size();
    if (index >= dim) {
        throw BadShapeError("basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return make_state(v, std::move(labels));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    for (const auto& l : b.labels) {
        if (a.has_label(l)) {
            throw DuplicateLabelError("tensor: label appears on both sides: " + l);
        }
    }
    StateVector out;
    out.n_qubits = a.n_qubits + b.n_qubits;
    out.labels = a.labels;
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    const Eigen::Index db = b.amps.size();
    out.amps.resize(a.amps.size() * db);
    for (Eigen::Index i = 0; i < a.amps.size(); ++i) {
        for (Eigen::Index j = 0; j < db; ++j) {
            out.amps[i * db + j] = a.amps[i] * b.amps[j];
        }
    }
    return out;
}

StateVector apply_operator(const StateVector& s, const Operator& op,
                           const std::vector<std::string>& targets) {
    const auto shifts = target_shifts(s, targets);
    const int k = static_cast<int>(targets.size());
    if (op.dim != (1 << k)) {
        throw DimensionMismatchError("operator dimension " + std::to_string(op.dim) +
                                     " does not match " + std::to_string(k) + " target qubits");
    }
    const Eigen::Index dim = s.amps.size();
    const int sub = op.dim;

    // Index of the full register with the target sub-index replaced by t.
    auto compose = [&](Eigen::Index base, int t) {
        Eigen::Index idx = base;
        for (int j = 0; j < k; ++j) {
            if ((t >> (k - 1 - j)) & 1) {
                idx |= Eigen::Index{1} << shifts[j];
            }
        }
        return idx;
    };

    StateVector out;
    out.n_qubits = s.n_qubits;
    out.labels = s.labels;
    out.amps = Vector::Zero(dim);
    for (Eigen::Index base = 0; base < dim; ++base) {
        bool all_clear = true;
        for (int j = 0; j < k; ++j) {
            if ((base >> shifts[j]) & 1) {
                all_clear = false;
                break;
            }
        }
        if (!all_clear) {
            continue;
        }
        for (int r = 0; r < sub; ++r) {
            Complex acc = 0.0;
            for (int t = 0; t < sub; ++t) {
                acc += op.mat(r, t) * s.amps[compose(base, t)];
            }
            out.amps[compose(base, r)] = acc;
        }
    }
    return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.labels != b.labels) {
        throw LabelMismatchError("inner product requires identical labels in identical order");
    }
    return a.amps.dot(b.amps);  // Eigen conjugates the left factor
}

double fidelity_pure(const StateVector& a, const StateVector& b) {
    const double f = std::norm(inner(a, b));
    return std::clamp(f, 0.0, 1.0);
}

bool DensityMatrix::is_valid(double tol) const {
    if (mat.rows() != mat.cols() || mat.rows() != (Eigen::Index{1} << n_qubits)) {
        return false;
    }
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > tol) {
        return false;
    }
    if (std::abs(mat.trace().real() - 1.0) > tol || std::abs(mat.trace().imag()) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es((mat + mat.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff() >= -tol;
}

double DensityMatrix::purity() const { return (mat * mat).trace().real(); }

DensityMatrix reduced_density(const StateVector& s, const std::vector<std::string>& keep) {
    if (keep.empty()) {
        throw UnknownLabelError("reduced_density: keep list is empty");
    }
    const auto keep_shifts = target_shifts(s, keep);
    const int nk = static_cast<int>(keep.size());

    std::vector<int> env_shifts;
    for (int pos = 0; pos < s.n_qubits; ++pos) {
        const int shift = s.n_qubits - 1 - pos;
        if (std::find(keep_shifts.begin(), keep_shifts.end(), shift) == keep_shifts.end()) {
            env_shifts.push_back(shift);
        }
    }

    auto keep_index = [&](Eigen::Index i) {
        int r = 0;
        for (int j = 0; j < nk; ++j) {
            r = (r << 1) | static_cast<int>((i >> keep_shifts[j]) & 1);
        }
        return r;
    };
    auto env_index = [&](Eigen::Index i) {
        Eigen::Index r = 0;
        for (int shift : env_shifts) {
            r = (r << 1) | ((i >> shift) & 1);
        }
        return r;
    };

    const Eigen::Index dim = s.amps.size();
    const Eigen::Index dk = Eigen::Index{1} << nk;
    DensityMatrix rho;
    rho.n_qubits = nk;
    rho.labels = keep;
    rho.mat = Matrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (s.amps[i] == Complex{0.0, 0.0}) {
            continue;
        }
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (env_index(i) != env_index(j)) {
                continue;
            }
            rho.mat(keep_index(i), keep_index(j)) += s.amps[i] * std::conj(s.amps[j]);
        }
    }
    return rho;
}

DensityMatrix pure_density(const StateVector& s) {
    DensityMatrix rho;
    rho.n_qubits = s.n_qubits;
    rho.labels = s.labels;
    rho.mat = s.amps * s.amps.adjoint();
    return rho;
}

double expectation(const DensityMatrix& rho, const StateVector& phi) {
    if (rho.labels != phi.labels) {
        throw LabelMismatchError("expectation requires identical labels in identical order");
    }
    return (phi.amps.adjoint() * rho.mat * phi.amps)(0, 0).real();
}

StateVector contract_subspace(const StateVector& s, const std::vector<std::string>& targets,
                              const Vector& basis0, const Vector& basis1,
                              const std::string& new_label) {
    const auto shifts = target_shifts(s, targets);
    const int k = static_cast<int>(targets.size());
    const Eigen::Index sub = Eigen::Index{1} << k;
    if (basis0.size() != sub || basis1.size() != sub) {
        throw DimensionMismatchError("subspace basis vectors must have dimension 2^targets");
    }
    if (std::abs(basis0.norm() - 1.0) > kConstructTol || std::abs(basis1.norm() - 1.0) > kConstructTol ||
        std::abs(basis0.dot(basis1)) > kConstructTol) {
        throw BadShapeError("subspace basis is not orthonormal");
    }

    std::vector<std::string> rest;
    for (const auto& l : s.labels) {
        if (std::find(targets.begin(), targets.end(), l) == targets.end()) {
            rest.push_back(l);
        }
    }
    if (std::find(rest.begin(), rest.end(), new_label) != rest.end()) {
        throw DuplicateLabelError("contract_subspace: fresh label already in use: " + new_label);
    }

    std::vector<int> rest_shifts;
    for (const auto& l : rest) {
        rest_shifts.push_back(s.n_qubits - 1 - s.label_pos(l));
    }

    StateVector out;
    out.n_qubits = static_cast<int>(rest.size()) + 1;
    out.labels = rest;
    out.labels.push_back(new_label);
    out.amps = Vector::Zero(Eigen::Index{1} << out.n_qubits);

    const Eigen::Index dim = s.amps.size();
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (s.amps[i] == Complex{0.0, 0.0}) {
            continue;
        }
        Eigen::Index t = 0;
        for (int j = 0; j < k; ++j) {
            t = (t << 1) | ((i >> shifts[j]) & 1);
        }
        Eigen::Index r = 0;
        for (int shift : rest_shifts) {
            r = (r << 1) | ((i >> shift) & 1);
        }
        out.amps[r * 2 + 0] += std::conj(basis0[t]) * s.amps[i];
        out.amps[r * 2 + 1] += std::conj(basis1[t]) * s.amps[i];
    }

    const double nin = s.norm();
    const double nout = out.norm();
    if (std::abs(nout * nout - nin * nin) > kConstructTol) {
        throw Error("contract_subspace: state has weight outside the subspace");
    }
    out.amps *= nin / nout;
    return out;
}

StateVector extract_qubit(const StateVector& s, const std::string& label) {
    DensityMatrix rho = reduced_density(s, {label});
    if (std::abs(rho.purity() - 1.0) > kConstructTol) {
        throw Error("extract_qubit: qubit " + label + " is entangled with the rest");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat);
    const auto& vecs = es.eigenvectors();
    // Largest eigenvalue last in Eigen's ascending order.
    Vector v = vecs.col(vecs.cols() - 1);
    return single_qubit(v[0], v[1], label);
}

}  // namespace qpsim
