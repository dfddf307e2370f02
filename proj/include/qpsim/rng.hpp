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

#include <cstdint>

namespace qpsim {

/// SplitMix64 pseudo-random generator (Steele, Lea & Vigna).
///
/// Hand-rolled instead of <random> because the stream is fully specified
/// here: the standard distributions are implementation-defined, and sampled
/// traces must be bit-reproducible across platforms and toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Stream for one Monte Carlo shot. The derivation is fixed:
    ///   state = mix(mix(seed) + shot + 1)
    /// so shots can be evaluated in any order (or in parallel) and still
    /// reproduce the sequential results exactly.
    static Rng for_shot(std::uint64_t seed, std::uint64_t shot) {
        return Rng(mix(mix(seed) + shot + 1));
    }

  private:
    // Finalizer of SplitMix64.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace qpsim
