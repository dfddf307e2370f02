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

#include <complex>

#include <Eigen/Dense>

namespace qpsim {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerance for invariants maintained by the library itself.
inline constexpr double kInvariantTol = 1e-10;

// Looser tolerance used when validating user-supplied data.
inline constexpr double kConstructTol = 1e-9;

// Branch probabilities at or below this are treated as exact zeros.
inline constexpr double kProbFloor = 1e-12;

}  // namespace qpsim
