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

#include "qpsim/protocols.hpp"

namespace qpsim {

/// Which measurement the dealer (Alice) uses in conclusive secret sharing
/// proposal I.
enum class AliceMethod { MH, QACT1 };

struct SecretShareTrace : ProtocolTrace {
    std::string claimant = "charlie";
    /// No single party ever holds enough to rebuild the secret on their own.
    bool single_party_can_reconstruct = false;
};

/// alpha|000> + beta|111> on labels A, B, C.
StateVector tripartite_state(const ChannelSpec& c);

/// Rotations Bob and Charlie apply once the dealer announces outcome
/// (flip, phase): X on both qubits when flip, then Z on Bob's when phase.
StateVector apply_dealer_corrections(const StateVector& s, int flip, int phase,
                                     const std::string& b_label, const std::string& c_label);

/// Three-party splitting over the GHZ state: dealer Bell measurement and
/// broadcast, Bob x-basis measurement and one bit, Charlie's rotation.
/// Always succeeds with fidelity one.
SecretShareTrace hbb_secret_share(const InputQubit& q, OutcomeSelector& sel);
SecretShareTrace hbb_secret_share(const InputQubit& q, Rng& rng);

/// Conclusive secret sharing I: the dealer swaps her Bell measurement for a
/// conclusive one (two-step subspace scheme or qubit-assisted scheme I);
/// afterwards the GHZ protocol continues unchanged. Succeeds with 2*beta^2.
SecretShareTrace css1(const InputQubit& q, const ChannelSpec& c, AliceMethod method,
                      OutcomeSelector& sel);
SecretShareTrace css1(const InputQubit& q, const ChannelSpec& c, AliceMethod method, Rng& rng);

/// Conclusive secret sharing II: dealer part unchanged; Bob replaces his
/// x measurement with unambiguous discrimination and reports twice (success
/// flag + which state). Succeeds with 2*beta^2.
SecretShareTrace css2(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel);
SecretShareTrace css2(const InputQubit& q, const ChannelSpec& c, Rng& rng);

/// Conclusive secret sharing III: the whole protocol runs as on the GHZ
/// state, then Charlie repairs his distorted qubit locally with the
/// ancilla-CNOT-discrimination recovery. Succeeds with 2*beta^2 and costs no
/// communication beyond the original protocol.
SecretShareTrace css3(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel);
SecretShareTrace css3(const InputQubit& q, const ChannelSpec& c, Rng& rng);

}  // namespace qpsim
