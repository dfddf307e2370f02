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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpsim/channel.hpp"
#include "qpsim/measurement.hpp"

namespace qpsim {

struct TraceEvent {
    std::string party;
    std::string action;
    std::string outcome;
};

/// Full record of one protocol execution.
struct ProtocolTrace {
    std::string protocol_id;
    std::vector<TraceEvent> events;
    /// Classical bits per directed channel, e.g. "alice_to_bob" -> 2.
    std::map<std::string, int> bits;
    bool success = false;
    /// Receiver's qubit at the end of the run; empty on dead branches.
    std::optional<InputQubit> final_state;
    double fidelity = 0.0;
    /// Set when enumeration forces the run down a probability-zero branch;
    /// such runs terminate at that point with the bits accrued so far.
    bool zero_probability = false;
};

/// Decides which branch each measurement takes. Protocol code is written
/// once against this interface; random sampling and exhaustive enumeration
/// are different selectors.
class OutcomeSelector {
  public:
    virtual ~OutcomeSelector() = default;
    virtual int select(const std::string& stage, const std::vector<std::string>& outcome_labels,
                       const std::vector<double>& probabilities) = 0;
};

class SamplingSelector final : public OutcomeSelector {
  public:
    explicit SamplingSelector(Rng& rng) : rng_(&rng) {}
    int select(const std::string& stage, const std::vector<std::string>& outcome_labels,
               const std::vector<double>& probabilities) override;
    const std::vector<std::string>& path() const { return path_; }

  private:
    Rng* rng_;
    std::vector<std::string> path_;
};

/// alpha|00> + beta|11> on labels A, B.
StateVector channel_state(const ChannelSpec& c);

/// The eight-state orthonormal basis of the sender's three qubits used by
/// the qubit-assisted scheme I, on labels 1, 2, A:
///   |000>, |111>, |011>, |100>,
///   (|010>+|101>)/sqrt2, (|010>-|101>)/sqrt2,
///   (|001>+|110>)/sqrt2, (|001>-|110>)/sqrt2.
std::vector<StateVector> qact1_basis();

/// Six-outcome measurement over that basis: two rank-2 projectors onto
/// span{|000>,|111>} and span{|011>,|100>}, then four rank-1 projectors.
ProjectiveMeasurement qact1_measurement();

/// Ordered bases of the rank-2 subspaces. The vector carrying the larger
/// Schmidt weight comes first, so the same discrimination POVM applies in
/// either subspace.
std::pair<Vector, Vector> parity_subspace_basis(int subspace);
std::pair<Vector, Vector> triple_subspace_basis(int subspace);

/// (flip, phase) correction announced with a rank-1 outcome of
/// qact1_measurement (outcome indices 2..5).
std::pair<int, int> qact1_direct_correction(int outcome_index);

/// Bell measurement + two bits + Pauli correction. Deterministic and exact
/// only on the maximal channel; on non-maximal channels the trace records
/// the imperfect fidelity and success stays false.
ProtocolTrace standard_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel);
ProtocolTrace standard_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng);

/// Two-step scheme: parity projection of the sender's pair, then unambiguous
/// discrimination inside the subspace. Three classical bits; succeeds with
/// probability 2*beta^2, and then with fidelity one.
ProtocolTrace mh_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel);
ProtocolTrace mh_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng);

/// Qubit-assisted scheme I: the sender adjoins an (alpha, beta) ancilla and
/// measures all three qubits with qact1_measurement. Rank-1 outcomes finish
/// with plain Pauli corrections (two bits); rank-2 outcomes fall back to
/// discrimination with the derived Schmidt pair (three bits).
ProtocolTrace qact1_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel);
ProtocolTrace qact1_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng);

/// Qubit-assisted scheme II: standard teleportation first, then the receiver
/// entangles an ancilla with CNOT and discriminates locally. Two classical
/// bits total; nothing is sent back.
ProtocolTrace qact2_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel);
ProtocolTrace qact2_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng);

}  // namespace qpsim
