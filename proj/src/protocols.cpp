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

#include "qpsim/protocols.hpp"

#include <cmath>
#include <numbers>

#include "qpsim/errors.hpp"

namespace qpsim {

namespace {

std::vector<double> probabilities(const std::vector<BranchResult>& branches) {
    std::vector<double> p;
    p.reserve(branches.size());
    for (const auto& b : branches) {
        p.push_back(b.probability);
    }
    return p;
}

void ev(ProtocolTrace& t, std::string party, std::string action, std::string outcome) {
    t.events.push_back({std::move(party), std::move(action), std::move(outcome)});
}

void finalize_zero(ProtocolTrace& t) {
    t.zero_probability = true;
    t.success = false;
    t.fidelity = 0.0;
    t.final_state.reset();
}

// Records the receiver's qubit and its fidelity against the input.
void finalize(ProtocolTrace& t, const StateVector& psi, const std::string& receiver,
              const InputQubit& q, bool success) {
    StateVector held = extract_qubit(psi, receiver);
    t.final_state = InputQubit(held.amps[0], held.amps[1]);
    t.fidelity = fidelity_pure(held, q.as_state(receiver));
    t.success = success;
}

std::string bell_bits(int k) {
    return std::string{static_cast<char>('0' + ((k >> 1) & 1)),
                       static_cast<char>('0' + (k & 1))};
}

}  // namespace

int SamplingSelector::select(const std::string&, const std::vector<std::string>& outcome_labels,
                             const std::vector<double>& probs) {
    const double r = rng_->uniform();
    double acc = 0.0;
    int last_live = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) {
            last_live = static_cast<int>(i);
        }
        acc += probs[i];
        if (r < acc) {
            path_.push_back(outcome_labels[i]);
            return static_cast<int>(i);
        }
    }
    path_.push_back(outcome_labels[last_live]);
    return last_live;
}

StateVector channel_state(const ChannelSpec& c) {
    c.validate();
    Vector v(4);
    v << c.alpha, 0.0, 0.0, c.beta;
    return make_state(v, {"A", "B"});
}

std::vector<StateVector> qact1_basis() {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::vector<std::string> labels{"1", "2", "A"};
    auto ket = [&](std::initializer_list<std::pair<int, double>> terms) {
        Vector v = Vector::Zero(8);
        for (auto [idx, amp] : terms) {
            v[idx] = amp;
        }
        return make_state(v, labels);
    };
    return {
        ket({{0, 1.0}}),            // |000>
        ket({{7, 1.0}}),            // |111>
        ket({{3, 1.0}}),            // |011>
        ket({{4, 1.0}}),            // |100>
        ket({{2, s}, {5, s}}),      // (|010>+|101>)/sqrt2
        ket({{2, s}, {5, -s}}),     // (|010>-|101>)/sqrt2
        ket({{1, s}, {6, s}}),      // (|001>+|110>)/sqrt2
        ket({{1, s}, {6, -s}}),     // (|001>-|110>)/sqrt2
    };
}

ProjectiveMeasurement qact1_measurement() {
    auto basis = qact1_basis();
    ProjectiveMeasurement m;
    m.projectors = {
        Operator{8, projector_onto(basis[0].amps).mat + projector_onto(basis[1].amps).mat},
        Operator{8, projector_onto(basis[2].amps).mat + projector_onto(basis[3].amps).mat},
        projector_onto(basis[4].amps),
        projector_onto(basis[5].amps),
        projector_onto(basis[6].amps),
        projector_onto(basis[7].amps),
    };
    m.outcome_labels = {"span_000_111", "span_011_100", "sym_010_101",
                        "asym_010_101", "sym_001_110", "asym_001_110"};
    return m;
}

std::pair<Vector, Vector> parity_subspace_basis(int subspace) {
    Vector e0 = Vector::Zero(4), e1 = Vector::Zero(4);
    if (subspace == 0) {
        e0[0] = 1.0;  // |00>
        e1[3] = 1.0;  // |11>
    } else {
        e0[2] = 1.0;  // |10>, the alpha-weighted vector of the odd block
        e1[1] = 1.0;  // |01>
    }
    return {e0, e1};
}

std::pair<Vector, Vector> triple_subspace_basis(int subspace) {
    Vector e0 = Vector::Zero(8), e1 = Vector::Zero(8);
    if (subspace == 0) {
        e0[0] = 1.0;  // |000>
        e1[7] = 1.0;  // |111>
    } else {
        e0[4] = 1.0;  // |100>, the alpha'-weighted vector
        e1[3] = 1.0;  // |011>
    }
    return {e0, e1};
}

std::pair<int, int> qact1_direct_correction(int outcome_index) {
    // Rank-1 outcomes herald the receiver states (a,b), (a,-b), (b,a), (-b,a).
    switch (outcome_index) {
        case 2:
            return {0, 0};
        case 3:
            return {0, 1};
        case 4:
            return {1, 0};
        case 5:
            return {1, 1};
        default:
            throw BadShapeError("not a rank-1 outcome of the three-qubit measurement");
    }
}

ProtocolTrace standard_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel) {
    ProtocolTrace t;
    t.protocol_id = "standard";
    t.bits = {{"alice_to_bob", 2}, {"bob_to_alice", 0}};

    StateVector psi = tensor(q.as_state("1"), channel_state(c));
    static const ProjectiveMeasurement bell = bell_measurement();
    auto branches = enumerate_projective(psi, bell, {"1", "A"});
    const int k = sel.select("alice_bell", bell.outcome_labels, probabilities(branches));
    ev(t, "alice", "measure_bell", bell.outcome_labels[k]);
    if (branches[k].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = branches[k].post_state;
    ev(t, "alice", "send_classical", "alice_to_bob:" + bell_bits(k));

    psi = apply_operator(psi, pauli_correction(k), {"B"});
    ev(t, "bob", "apply_correction", correction_name(k));

    // Exactness is a property of the channel, not of a lucky outcome: the
    // plain scheme only guarantees the input state on the maximal channel.
    finalize(t, psi, "B", q, c.is_maximal());
    return t;
}

ProtocolTrace mh_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel) {
    ProtocolTrace t;
    t.protocol_id = "mh";
    t.bits = {{"alice_to_bob", 3}, {"bob_to_alice", 0}};

    StateVector psi = tensor(q.as_state("1"), channel_state(c));

    static const ProjectiveMeasurement parity = parity_measurement();
    auto step1 = enumerate_projective(psi, parity, {"1", "A"});
    const int s = sel.select("alice_parity", parity.outcome_labels, probabilities(step1));
    ev(t, "alice", "measure_parity", parity.outcome_labels[s]);
    if (step1[s].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    auto [e0, e1] = parity_subspace_basis(s);
    psi = contract_subspace(step1[s].post_state, {"1", "A"}, e0, e1, "m");

    auto povm = discrimination_povm(c);
    auto step2 = enumerate_povm(psi, povm, {"m"});
    const int o = sel.select("alice_discrimination", povm.outcome_labels, probabilities(step2));
    ev(t, "alice", "measure_discrimination", povm.outcome_labels[o]);
    if (step2[o].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = step2[o].post_state;
    ev(t, "alice", "send_classical", "alice_to_bob:3bits");

    if (!povm.conclusive_mask[o]) {
        ev(t, "bob", "abort", "inconclusive");
        finalize(t, psi, "B", q, false);
        return t;
    }
    const int bell_index = (s << 1) | o;  // subspace is the flip bit, sign the phase bit
    psi = apply_operator(psi, pauli_correction(bell_index), {"B"});
    ev(t, "bob", "apply_correction", correction_name(bell_index));
    finalize(t, psi, "B", q, true);
    return t;
}

ProtocolTrace qact1_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel) {
    ProtocolTrace t;
    t.protocol_id = "qact1";

    StateVector psi = tensor(tensor(q.as_state("1"), single_qubit(c.alpha, c.beta, "2")),
                             channel_state(c));

    static const ProjectiveMeasurement m = qact1_measurement();
    auto step1 = enumerate_projective(psi, m, {"1", "2", "A"});
    const int k = sel.select("alice_triple", m.outcome_labels, probabilities(step1));
    ev(t, "alice", "measure_triple", m.outcome_labels[k]);

    if (k >= 2) {
        // Rank-1 outcome: the receiver's state is already one Pauli away.
        t.bits = {{"alice_to_bob", 2}, {"bob_to_alice", 0}};
        if (step1[k].probability <= kProbFloor) {
            finalize_zero(t);
            return t;
        }
        psi = step1[k].post_state;
        auto [flip, phase] = qact1_direct_correction(k);
        const int bell_index = (flip << 1) | phase;
        ev(t, "alice", "send_classical", "alice_to_bob:" + bell_bits(bell_index));
        psi = apply_operator(psi, pauli_correction(bell_index), {"B"});
        ev(t, "bob", "apply_correction", correction_name(bell_index));
        finalize(t, psi, "B", q, true);
        return t;
    }

    // Rank-2 outcome: discriminate inside the subspace with the derived pair.
    t.bits = {{"alice_to_bob", 3}, {"bob_to_alice", 0}};
    if (step1[k].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    auto [e0, e1] = triple_subspace_basis(k);
    psi = contract_subspace(step1[k].post_state, {"1", "2", "A"}, e0, e1, "m");

    auto povm = discrimination_povm(derived_schmidt(c).as_channel());
    auto step2 = enumerate_povm(psi, povm, {"m"});
    const int o = sel.select("alice_discrimination", povm.outcome_labels, probabilities(step2));
    ev(t, "alice", "measure_discrimination", povm.outcome_labels[o]);
    if (step2[o].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = step2[o].post_state;
    ev(t, "alice", "send_classical", "alice_to_bob:3bits");

    if (!povm.conclusive_mask[o]) {
        ev(t, "bob", "abort", "inconclusive");
        finalize(t, psi, "B", q, false);
        return t;
    }
    const int bell_index = (k << 1) | o;
    psi = apply_operator(psi, pauli_correction(bell_index), {"B"});
    ev(t, "bob", "apply_correction", correction_name(bell_index));
    finalize(t, psi, "B", q, true);
    return t;
}

ProtocolTrace qact2_teleport(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel) {
    ProtocolTrace t;
    t.protocol_id = "qact2";
    t.bits = {{"alice_to_bob", 2}, {"bob_to_alice", 0}};

    StateVector psi = tensor(q.as_state("1"), channel_state(c));
    static const ProjectiveMeasurement bell = bell_measurement();
    auto branches = enumerate_projective(psi, bell, {"1", "A"});
    const int k = sel.select("alice_bell", bell.outcome_labels, probabilities(branches));
    ev(t, "alice", "measure_bell", bell.outcome_labels[k]);
    if (branches[k].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = branches[k].post_state;
    ev(t, "alice", "send_classical", "alice_to_bob:" + bell_bits(k));

    psi = apply_operator(psi, pauli_correction(k), {"B"});
    ev(t, "bob", "apply_correction", correction_name(k));

    // Local recovery: entangle with a fresh ancilla, then discriminate.
    psi = tensor(psi, single_qubit(1.0, 0.0, "R"));
    ev(t, "bob", "prepare_ancilla", "R=|0>");
    psi = apply_operator(psi, cnot(), {"B", "R"});
    ev(t, "bob", "apply_cnot", "B->R");

    // In the swapped Bell branches the held state carries (beta, alpha)
    // weights; a known X rotation restores the (alpha, beta) orientation the
    // discrimination POVM expects. Bob knows the branch from Alice's bits.
    if ((k >> 1) & 1) {
        psi = apply_operator(psi, pauli_x(), {"B"});
        ev(t, "bob", "apply_basis_swap", "X on B");
    }

    auto povm = discrimination_povm(c);
    auto step2 = enumerate_povm(psi, povm, {"B"});
    const int o = sel.select("bob_discrimination", povm.outcome_labels, probabilities(step2));
    ev(t, "bob", "measure_discrimination", povm.outcome_labels[o]);
    if (step2[o].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = step2[o].post_state;

    if (!povm.conclusive_mask[o]) {
        ev(t, "bob", "abort", "inconclusive");
        finalize(t, psi, "R", q, false);
        return t;
    }
    if (o == 1) {
        psi = apply_operator(psi, pauli_z(), {"R"});
        ev(t, "bob", "apply_correction", "Z");
    }
    finalize(t, psi, "R", q, true);
    return t;
}

ProtocolTrace standard_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng) {
    SamplingSelector sel(rng);
    return standard_teleport(q, c, sel);
}

ProtocolTrace mh_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng) {
    SamplingSelector sel(rng);
    return mh_teleport(q, c, sel);
}

ProtocolTrace qact1_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng) {
    SamplingSelector sel(rng);
    return qact1_teleport(q, c, sel);
}

ProtocolTrace qact2_teleport(const InputQubit& q, const ChannelSpec& c, Rng& rng) {
    SamplingSelector sel(rng);
    return qact2_teleport(q, c, sel);
}

}  // namespace qpsim
