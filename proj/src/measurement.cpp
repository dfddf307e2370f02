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

#include "qpsim/measurement.hpp"

#include <cmath>
#include <numbers>

#include "qpsim/errors.hpp"

namespace qpsim {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

StateVector zero_placeholder(const StateVector& like) {
    StateVector z;
    z.n_qubits = like.n_qubits;
    z.labels = like.labels;
    z.amps = Vector::Zero(like.amps.size());
    return z;
}

// Sample an index from exact branch probabilities. Zero-probability branches
// occupy an empty slice of [0,1) and can never be drawn.
int sample_index(const std::vector<BranchResult>& branches, Rng& rng) {
    const double r = rng.uniform();
    double acc = 0.0;
    int last_live = -1;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].probability > 0.0) {
            last_live = static_cast<int>(i);
        }
        acc += branches[i].probability;
        if (r < acc) {
            return static_cast<int>(i);
        }
    }
    return last_live >= 0 ? last_live : static_cast<int>(branches.size()) - 1;
}

void check_targets(const StateVector& s, int op_dim, const std::vector<std::string>& targets) {
    if (op_dim != (1 << targets.size())) {
        throw DimensionMismatchError("measurement dimension does not match target count");
    }
    for (const auto& t : targets) {
        s.label_pos(t);  // throws UnknownLabelError
    }
}

}  // namespace

void ProjectiveMeasurement::validate() const {
    if (validated) {
        return;
    }
    if (projectors.empty()) {
        throw InvalidMeasurementError("measurement has no projectors");
    }
    if (outcome_labels.size() != projectors.size()) {
        throw InvalidMeasurementError("outcome label count does not match projector count");
    }
    const int d = projectors.front().dim;
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        if (projectors[i].dim != d) {
            throw InvalidMeasurementError("projectors have mixed dimensions");
        }
        if (!projectors[i].is_projector(kInvariantTol)) {
            throw InvalidMeasurementError("element " + std::to_string(i) + " is not a projector");
        }
        sum += projectors[i].mat;
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            if (max_abs(projectors[i].mat * projectors[j].mat) > kInvariantTol) {
                throw InvalidMeasurementError("projectors " + std::to_string(i) + " and " +
                                              std::to_string(j) + " are not orthogonal");
            }
        }
    }
    if (max_abs(sum - Matrix::Identity(d, d)) > kInvariantTol) {
        throw InvalidMeasurementError("projectors do not sum to the identity");
    }
    validated = true;
}

void PovmSet::validate() const {
    if (validated) {
        return;
    }
    if (elements.empty() || kraus.size() != elements.size() ||
        outcome_labels.size() != elements.size() || conclusive_mask.size() != elements.size()) {
        throw InvalidPovmError("POVM element, Kraus, label and mask counts must agree");
    }
    const int d = elements.front().dim;
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].dim != d || kraus[i].dim != d) {
            throw InvalidPovmError("POVM operators have mixed dimensions");
        }
        if (!elements[i].is_psd(kInvariantTol)) {
            throw InvalidPovmError("element " + std::to_string(i) + " is not PSD");
        }
        if (max_abs(kraus[i].mat.adjoint() * kraus[i].mat - elements[i].mat) > kInvariantTol) {
            throw InvalidPovmError("Kraus operator " + std::to_string(i) +
                                   " does not reproduce its element");
        }
        sum += elements[i].mat;
    }
    if (max_abs(sum - Matrix::Identity(d, d)) > kInvariantTol) {
        throw InvalidPovmError("POVM elements do not sum to the identity");
    }
    validated = true;
}

ProjectiveMeasurement bell_measurement() {
    const double s = 1.0 / std::numbers::sqrt2;
    Vector phi_plus(4), phi_minus(4), psi_plus(4), psi_minus(4);
    phi_plus << s, 0, 0, s;
    phi_minus << s, 0, 0, -s;
    psi_plus << 0, s, s, 0;
    psi_minus << 0, s, -s, 0;
    return ProjectiveMeasurement{
        {projector_onto(phi_plus), projector_onto(phi_minus), projector_onto(psi_plus),
         projector_onto(psi_minus)},
        {"phi_plus", "phi_minus", "psi_plus", "psi_minus"}};
}

ProjectiveMeasurement parity_measurement() {
    Matrix even = Matrix::Zero(4, 4), odd = Matrix::Zero(4, 4);
    even(0, 0) = even(3, 3) = 1.0;
    odd(1, 1) = odd(2, 2) = 1.0;
    return ProjectiveMeasurement{{Operator{4, even}, Operator{4, odd}},
                                 {"even_parity", "odd_parity"}};
}

ProjectiveMeasurement x_measurement() {
    auto [plus, minus] = x_basis();
    return ProjectiveMeasurement{{plus, minus}, {"x_plus", "x_minus"}};
}

std::vector<BranchResult> enumerate_projective(const StateVector& s,
                                               const ProjectiveMeasurement& m,
                                               const std::vector<std::string>& targets) {
    m.validate();
    check_targets(s, m.projectors.front().dim, targets);
    std::vector<BranchResult> out;
    out.reserve(m.projectors.size());
    double total = 0.0;
    for (std::size_t i = 0; i < m.projectors.size(); ++i) {
        StateVector v = apply_operator(s, m.projectors[i], targets);
        double p = v.amps.squaredNorm();
        total += p;
        BranchResult br;
        br.outcome_index = static_cast<int>(i);
        if (p > kProbFloor) {
            br.probability = p;
            v.amps /= std::sqrt(p);
            br.post_state = std::move(v);
            br.post_state_valid = true;
        } else {
            br.probability = 0.0;
            br.post_state = zero_placeholder(s);
            br.post_state_valid = false;
        }
        out.push_back(std::move(br));
    }
    const double n2 = s.amps.squaredNorm();
    if (std::abs(total - n2) > kInvariantTol) {
        throw InvalidMeasurementError("branch probabilities do not exhaust the state norm");
    }
    return out;
}

BranchResult projective_measure(const StateVector& s, const ProjectiveMeasurement& m,
                                const std::vector<std::string>& targets, Rng& rng) {
    auto branches = enumerate_projective(s, m, targets);
    return branches[sample_index(branches, rng)];
}

PovmSet discrimination_povm(const ChannelSpec& c) {
    c.validate();
    // The same pair recurs for every shot of a Monte Carlo run; memoize the
    // last construction per thread.
    thread_local double cached_alpha = -1.0;
    thread_local double cached_beta = -1.0;
    thread_local PovmSet cached;
    if (c.alpha == cached_alpha && c.beta == cached_beta) {
        return cached;
    }

    const double a = c.alpha;
    const double b = c.beta;
    // alpha >= 1/sqrt(2) always holds for a valid Schmidt pair.
    Matrix a1(2, 2), a2(2, 2);
    const double scale = 1.0 / (2.0 * a * a);
    a1 << b * b * scale, a * b * scale, a * b * scale, a * a * scale;
    a2 << b * b * scale, -a * b * scale, -a * b * scale, a * a * scale;
    Matrix a3 = Matrix::Identity(2, 2) - a1 - a2;  // completeness is exact by construction

    PovmSet p;
    p.elements = {Operator{2, a1}, Operator{2, a2}, Operator{2, a3}};
    p.kraus = {kraus_from_element(p.elements[0]), kraus_from_element(p.elements[1]),
               kraus_from_element(p.elements[2])};
    p.outcome_labels = {"conclusive_plus", "conclusive_minus", "inconclusive"};
    p.conclusive_mask = {true, true, false};
    p.validate();
    cached_alpha = c.alpha;
    cached_beta = c.beta;
    cached = p;
    return p;
}

std::vector<BranchResult> enumerate_povm(const StateVector& s, const PovmSet& p,
                                         const std::vector<std::string>& targets) {
    p.validate();
    check_targets(s, p.elements.front().dim, targets);
    std::vector<BranchResult> out;
    out.reserve(p.elements.size());
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        StateVector v = apply_operator(s, p.kraus[i], targets);
        // <s|A_i|s> = |K_i s|^2 since A_i = K_i^dag K_i.
        double prob = v.amps.squaredNorm();
        BranchResult br;
        br.outcome_index = static_cast<int>(i);
        if (prob > kProbFloor) {
            br.probability = prob;
            v.amps /= std::sqrt(prob);
            br.post_state = std::move(v);
            br.post_state_valid = true;
        } else {
            br.probability = 0.0;
            br.post_state = zero_placeholder(s);
            br.post_state_valid = false;
        }
        out.push_back(std::move(br));
    }
    return out;
}

BranchResult povm_measure(const StateVector& s, const PovmSet& p,
                          const std::vector<std::string>& targets, Rng& rng) {
    auto branches = enumerate_povm(s, p, targets);
    return branches[sample_index(branches, rng)];
}

Operator kraus_from_element(const Operator& a) {
    if (!a.is_hermitian(kConstructTol)) {
        throw NotPsdError("element is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es((a.mat + a.mat.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() < -kInvariantTol) {
        throw NotPsdError("element has a negative eigenvalue");
    }
    Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Matrix k = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
    return Operator{a.dim, k};
}

}  // namespace qpsim
