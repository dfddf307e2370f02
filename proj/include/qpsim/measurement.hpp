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

#include "qpsim/channel.hpp"
#include "qpsim/gates.hpp"
#include "qpsim/rng.hpp"
#include "qpsim/statevec.hpp"

namespace qpsim {

/// Complete set of pairwise-orthogonal projectors (mixed ranks allowed).
/// Treat instances as immutable once validated: validation is memoized, and
/// mutating the operators afterwards would go unnoticed.
struct ProjectiveMeasurement {
    std::vector<Operator> projectors;
    std::vector<std::string> outcome_labels;

    /// Throws InvalidMeasurementError when any element fails P^2 = P = P^dag,
    /// any pair fails Pi*Pj = 0, or the sum is not the identity.
    void validate() const;

    mutable bool validated = false;  // memo; do not touch
};

/// Generalized measurement: PSD elements summing to identity, one Kraus
/// operator per element with K^dag K = A, and a mask marking which outcomes
/// identify the input state unambiguously. Immutable once validated, as
/// above.
struct PovmSet {
    std::vector<Operator> elements;
    std::vector<Operator> kraus;
    std::vector<std::string> outcome_labels;
    std::vector<bool> conclusive_mask;

    void validate() const;  // InvalidPovmError

    mutable bool validated = false;  // memo; do not touch
};

/// One measurement branch. When probability falls at or below the numerical
/// floor, post_state_valid is false and post_state holds a zero placeholder
/// (never NaN).
struct BranchResult {
    int outcome_index = 0;
    double probability = 0.0;
    StateVector post_state;
    bool post_state_valid = false;
};

ProjectiveMeasurement bell_measurement();
/// Two-outcome measurement onto span{|00>,|11>} ("even_parity") and
/// span{|01>,|10>} ("odd_parity").
ProjectiveMeasurement parity_measurement();
ProjectiveMeasurement x_measurement();

BranchResult projective_measure(const StateVector& s, const ProjectiveMeasurement& m,
                                const std::vector<std::string>& targets, Rng& rng);

/// Deterministic, exhaustive version: every branch with its exact
/// probability; zero-probability branches are included and flagged.
std::vector<BranchResult> enumerate_projective(const StateVector& s,
                                               const ProjectiveMeasurement& m,
                                               const std::vector<std::string>& targets);

/// Optimal unambiguous discrimination of the equiprobable pair
/// (alpha, beta) and (alpha, -beta), alpha >= beta. Outcomes:
/// "conclusive_plus" (annihilates the minus state), "conclusive_minus"
/// (annihilates the plus state), "inconclusive". Each input yields a
/// conclusive result with probability exactly 2*beta^2; the element sum is
/// the identity by construction. Degenerate cases: alpha = beta makes the
/// inconclusive element vanish, beta = 0 makes conclusive outcomes
/// impossible.
PovmSet discrimination_povm(const ChannelSpec& c);

BranchResult povm_measure(const StateVector& s, const PovmSet& p,
                          const std::vector<std::string>& targets, Rng& rng);
std::vector<BranchResult> enumerate_povm(const StateVector& s, const PovmSet& p,
                                         const std::vector<std::string>& targets);

/// Unique PSD square root K of a PSD element (so K^dag K = K^2 = a), via
/// eigendecomposition. Throws NotPsdError.
Operator kraus_from_element(const Operator& a);

}  // namespace qpsim
