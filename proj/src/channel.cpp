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

#include "qpsim/channel.hpp"

#include <cmath>
#include <numbers>

#include "qpsim/errors.hpp"

namespace qpsim {

ChannelSpec ChannelSpec::from_beta(double beta) {
    if (!(beta >= 0.0) || beta > 1.0 / std::numbers::sqrt2 + kConstructTol) {
        throw BadSpecError("beta must lie in [0, 1/sqrt(2)]");
    }
    ChannelSpec c{std::sqrt(std::max(0.0, 1.0 - beta * beta)), beta};
    c.validate();
    return c;
}

ChannelSpec ChannelSpec::maximal() { return from_beta(1.0 / std::numbers::sqrt2); }

void ChannelSpec::validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw BadSpecError("channel coefficients must be finite");
    }
    if (beta < 0.0 || alpha < beta - kConstructTol) {
        throw BadSpecError("channel requires alpha >= beta >= 0");
    }
    if (std::abs(alpha * alpha + beta * beta - 1.0) > kConstructTol) {
        throw BadSpecError("channel requires alpha^2 + beta^2 = 1");
    }
}

bool ChannelSpec::is_maximal(double tol) const { return std::abs(alpha - beta) <= tol; }

InputQubit::InputQubit(Complex a_, Complex b_) : a(a_), b(b_) {
    const double n2 = std::norm(a) + std::norm(b);
    if (!std::isfinite(n2)) {
        throw BadSpecError("input qubit amplitudes must be finite");
    }
    if (std::abs(n2 - 1.0) > kConstructTol) {
        throw BadSpecError("input qubit must be normalized: |a|^2 + |b|^2 = 1");
    }
}

InputQubit InputQubit::normalized(Complex a, Complex b) {
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    if (!(n > kConstructTol)) {
        throw ZeroNormError("input qubit has zero norm");
    }
    return InputQubit(a / n, b / n);
}

StateVector InputQubit::as_state(const std::string& label) const {
    return single_qubit(a, b, label);
}

ChannelSpec DerivedSchmidt::as_channel() const {
    ChannelSpec c{alpha_prime, beta_prime};
    c.validate();
    return c;
}

DerivedSchmidt derived_schmidt(const ChannelSpec& c) {
    c.validate();
    const double a2 = c.alpha * c.alpha;
    const double b2 = c.beta * c.beta;
    const double s = std::sqrt(a2 * a2 + b2 * b2);
    return DerivedSchmidt{a2 / s, b2 / s};
}

InputQubit reference_input() {
    return InputQubit(Complex{std::sqrt(1.0 / 3.0), 0.0}, Complex{std::sqrt(2.0 / 3.0), 0.0});
}

InputQubit random_input(Rng& rng) {
    const double u = rng.uniform();  // |b|^2 uniform on [0,1]
    const double phi_a = 2.0 * std::numbers::pi * rng.uniform();
    const double phi_b = 2.0 * std::numbers::pi * rng.uniform();
    const double ra = std::sqrt(1.0 - u);
    const double rb = std::sqrt(u);
    return InputQubit::normalized(Complex{ra * std::cos(phi_a), ra * std::sin(phi_a)},
                                  Complex{rb * std::cos(phi_b), rb * std::sin(phi_b)});
}

}  // namespace qpsim
