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

#include "qpsim/rng.hpp"
#include "qpsim/statevec.hpp"

namespace qpsim {

/// Schmidt pair (alpha, beta) of the shared entangled resource, with
/// alpha >= beta >= 0 and alpha^2 + beta^2 = 1. beta is the smaller
/// coefficient; every conclusive success probability is 2*beta^2.
struct ChannelSpec {
    double alpha = 1.0;
    double beta = 0.0;

    static ChannelSpec from_beta(double beta);
    static ChannelSpec maximal();

    void validate() const;  // BadSpecError on violation
    bool is_maximal(double tol = kConstructTol) const;
};

/// The unknown qubit a|0> + b|1> handed to the sender.
struct InputQubit {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    InputQubit() = default;
    InputQubit(Complex a, Complex b);  // BadSpecError unless normalized
    static InputQubit normalized(Complex a, Complex b);

    StateVector as_state(const std::string& label) const;
};

/// Schmidt pair of the two-dimensional blocks that appear once the sender
/// adjoins an (alpha, beta) ancilla: alpha' = alpha^2 / sqrt(alpha^4+beta^4),
/// beta' = beta^2 / sqrt(alpha^4+beta^4).
struct DerivedSchmidt {
    double alpha_prime = 1.0;
    double beta_prime = 0.0;

    ChannelSpec as_channel() const;
};

DerivedSchmidt derived_schmidt(const ChannelSpec& c);

/// Fixed non-symmetric reference state (sqrt(1/3), sqrt(2/3)); a generic
/// input that exposes sign errors a balanced state would mask.
InputQubit reference_input();

/// Haar-random qubit state.
InputQubit random_input(Rng& rng);

}  // namespace qpsim
