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

#include "qpsim/secretshare.hpp"

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

StateVector apply_corrections_with_events(SecretShareTrace& t, const StateVector& s, int flip,
                                          int phase) {
    StateVector out = apply_dealer_corrections(s, flip, phase, "B", "C");
    if (flip) {
        ev(t, "bob", "apply_correction", "X");
        ev(t, "charlie", "apply_correction", "X");
    }
    if (phase) {
        ev(t, "bob", "apply_correction", "Z");
    }
    return out;
}

// Bob's x measurement, one bit to Charlie, Charlie's conditional Z. Shared
// tail of the GHZ protocol and of conclusive proposal I.
void bob_x_stage(SecretShareTrace& t, StateVector psi, const InputQubit& q,
                 OutcomeSelector& sel) {
    static const ProjectiveMeasurement xm = x_measurement();
    auto branches = enumerate_projective(psi, xm, {"B"});
    const int j = sel.select("bob_x", xm.outcome_labels, probabilities(branches));
    ev(t, "bob", "measure_x", xm.outcome_labels[j]);
    t.bits["bob_to_charlie"] = 1;
    ev(t, "bob", "send_classical", "bob_to_charlie:1bit");
    if (branches[j].probability <= kProbFloor) {
        finalize_zero(t);
        return;
    }
    psi = branches[j].post_state;
    if (j == 1) {
        psi = apply_operator(psi, pauli_z(), {"C"});
        ev(t, "charlie", "apply_correction", "Z");
    }
    finalize(t, psi, "C", q, true);
}

}  // namespace

StateVector tripartite_state(const ChannelSpec& c) {
    c.validate();
    Vector v = Vector::Zero(8);
    v[0] = c.alpha;
    v[7] = c.beta;
    return make_state(v, {"A", "B", "C"});
}

StateVector apply_dealer_corrections(const StateVector& s, int flip, int phase,
                                     const std::string& b_label, const std::string& c_label) {
    StateVector out = s;
    if (flip) {
        out = apply_operator(out, pauli_x(), {b_label});
        out = apply_operator(out, pauli_x(), {c_label});
    }
    if (phase) {
        out = apply_operator(out, pauli_z(), {b_label});
    }
    return out;
}

SecretShareTrace hbb_secret_share(const InputQubit& q, OutcomeSelector& sel) {
    SecretShareTrace t;
    t.protocol_id = "hbb";
    t.bits = {{"alice_to_bob", 2}, {"alice_to_charlie", 2}, {"bob_to_charlie", 0}};

    StateVector psi = tensor(q.as_state("1"), tripartite_state(ChannelSpec::maximal()));
    static const ProjectiveMeasurement bell = bell_measurement();
    auto branches = enumerate_projective(psi, bell, {"1", "A"});
    const int k = sel.select("alice_bell", bell.outcome_labels, probabilities(branches));
    ev(t, "alice", "measure_bell", bell.outcome_labels[k]);
    if (branches[k].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    ev(t, "alice", "send_classical", "alice_to_bob:" + bell_bits(k));
    ev(t, "alice", "send_classical", "alice_to_charlie:" + bell_bits(k));
    psi = apply_corrections_with_events(t, branches[k].post_state, (k >> 1) & 1, k & 1);

    bob_x_stage(t, std::move(psi), q, sel);
    return t;
}

SecretShareTrace css1(const InputQubit& q, const ChannelSpec& c, AliceMethod method,
                      OutcomeSelector& sel) {
    SecretShareTrace t;
    t.protocol_id = method == AliceMethod::MH ? "css1_mh" : "css1_qact1";

    int flip = 0;
    int phase = 0;
    bool conclusive = true;
    StateVector psi;

    if (method == AliceMethod::MH) {
        t.bits = {{"alice_to_bob", 3}, {"alice_to_charlie", 3}, {"bob_to_charlie", 0}};
        psi = tensor(q.as_state("1"), tripartite_state(c));

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
        ev(t, "alice", "send_classical", "alice_to_charlie:3bits");
        flip = s;
        phase = o;
        conclusive = povm.conclusive_mask[o];
    } else {
        psi = tensor(tensor(q.as_state("1"), single_qubit(c.alpha, c.beta, "2")),
                     tripartite_state(c));

        static const ProjectiveMeasurement m = qact1_measurement();
        auto step1 = enumerate_projective(psi, m, {"1", "2", "A"});
        const int k = sel.select("alice_triple", m.outcome_labels, probabilities(step1));
        ev(t, "alice", "measure_triple", m.outcome_labels[k]);

        if (k >= 2) {
            t.bits = {{"alice_to_bob", 2}, {"alice_to_charlie", 2}, {"bob_to_charlie", 0}};
            if (step1[k].probability <= kProbFloor) {
                finalize_zero(t);
                return t;
            }
            psi = step1[k].post_state;
            std::tie(flip, phase) = qact1_direct_correction(k);
            const std::string msg = bell_bits((flip << 1) | phase);
            ev(t, "alice", "send_classical", "alice_to_bob:" + msg);
            ev(t, "alice", "send_classical", "alice_to_charlie:" + msg);
        } else {
            t.bits = {{"alice_to_bob", 3}, {"alice_to_charlie", 3}, {"bob_to_charlie", 0}};
            if (step1[k].probability <= kProbFloor) {
                finalize_zero(t);
                return t;
            }
            auto [e0, e1] = triple_subspace_basis(k);
            psi = contract_subspace(step1[k].post_state, {"1", "2", "A"}, e0, e1, "m");

            auto povm = discrimination_povm(derived_schmidt(c).as_channel());
            auto step2 = enumerate_povm(psi, povm, {"m"});
            const int o =
                sel.select("alice_discrimination", povm.outcome_labels, probabilities(step2));
            ev(t, "alice", "measure_discrimination", povm.outcome_labels[o]);
            if (step2[o].probability <= kProbFloor) {
                finalize_zero(t);
                return t;
            }
            psi = step2[o].post_state;
            ev(t, "alice", "send_classical", "alice_to_bob:3bits");
            ev(t, "alice", "send_classical", "alice_to_charlie:3bits");
            flip = k;
            phase = o;
            conclusive = povm.conclusive_mask[o];
        }
    }

    if (!conclusive) {
        ev(t, "bob", "abort", "inconclusive");
        finalize(t, psi, "C", q, false);
        return t;
    }
    psi = apply_corrections_with_events(t, psi, flip, phase);
    bob_x_stage(t, std::move(psi), q, sel);
    return t;
}

SecretShareTrace css2(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel) {
    SecretShareTrace t;
    t.protocol_id = "css2";
    t.bits = {{"alice_to_bob", 2}, {"alice_to_charlie", 2}, {"bob_to_charlie", 0}};

    StateVector psi = tensor(q.as_state("1"), tripartite_state(c));
    static const ProjectiveMeasurement bell = bell_measurement();
    auto step1 = enumerate_projective(psi, bell, {"1", "A"});
    const int k = sel.select("alice_bell", bell.outcome_labels, probabilities(step1));
    ev(t, "alice", "measure_bell", bell.outcome_labels[k]);
    if (step1[k].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    ev(t, "alice", "send_classical", "alice_to_bob:" + bell_bits(k));
    ev(t, "alice", "send_classical", "alice_to_charlie:" + bell_bits(k));
    const int flip = (k >> 1) & 1;
    psi = apply_corrections_with_events(t, step1[k].post_state, flip, k & 1);

    // Swapped Bell branches leave (beta, alpha) weights on Bob's qubit; a
    // known X rotation re-aligns his qubit with the discrimination POVM.
    if (flip) {
        psi = apply_operator(psi, pauli_x(), {"B"});
        ev(t, "bob", "apply_basis_swap", "X on B");
    }

    auto povm = discrimination_povm(c);
    auto step2 = enumerate_povm(psi, povm, {"B"});
    const int o = sel.select("bob_discrimination", povm.outcome_labels, probabilities(step2));
    ev(t, "bob", "measure_discrimination", povm.outcome_labels[o]);
    t.bits["bob_to_charlie"] = povm.conclusive_mask[o] ? 2 : 1;
    ev(t, "bob", "send_classical",
       "bob_to_charlie:" + std::to_string(t.bits["bob_to_charlie"]) + "bits");
    if (step2[o].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = step2[o].post_state;

    if (!povm.conclusive_mask[o]) {
        ev(t, "charlie", "abort", "inconclusive");
        finalize(t, psi, "C", q, false);
        return t;
    }
    if (o == 1) {
        psi = apply_operator(psi, pauli_z(), {"C"});
        ev(t, "charlie", "apply_correction", "Z");
    }
    finalize(t, psi, "C", q, true);
    return t;
}

SecretShareTrace css3(const InputQubit& q, const ChannelSpec& c, OutcomeSelector& sel) {
    SecretShareTrace t;
    t.protocol_id = "css3";
    t.bits = {{"alice_to_bob", 2}, {"alice_to_charlie", 2}, {"bob_to_charlie", 1}};

    StateVector psi = tensor(q.as_state("1"), tripartite_state(c));
    static const ProjectiveMeasurement bell = bell_measurement();
    auto step1 = enumerate_projective(psi, bell, {"1", "A"});
    const int k = sel.select("alice_bell", bell.outcome_labels, probabilities(step1));
    ev(t, "alice", "measure_bell", bell.outcome_labels[k]);
    if (step1[k].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    ev(t, "alice", "send_classical", "alice_to_bob:" + bell_bits(k));
    ev(t, "alice", "send_classical", "alice_to_charlie:" + bell_bits(k));
    const int flip = (k >> 1) & 1;
    psi = apply_corrections_with_events(t, step1[k].post_state, flip, k & 1);

    static const ProjectiveMeasurement xm = x_measurement();
    auto step2 = enumerate_projective(psi, xm, {"B"});
    const int j = sel.select("bob_x", xm.outcome_labels, probabilities(step2));
    ev(t, "bob", "measure_x", xm.outcome_labels[j]);
    ev(t, "bob", "send_classical", "bob_to_charlie:1bit");
    if (step2[j].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = step2[j].post_state;
    if (j == 1) {
        psi = apply_operator(psi, pauli_z(), {"C"});
        ev(t, "charlie", "apply_correction", "Z");
    }

    // Charlie now holds a Schmidt-distorted qubit and repairs it locally,
    // exactly as the receiver does in qubit-assisted scheme II.
    psi = tensor(psi, single_qubit(1.0, 0.0, "R"));
    ev(t, "charlie", "prepare_ancilla", "R=|0>");
    psi = apply_operator(psi, cnot(), {"C", "R"});
    ev(t, "charlie", "apply_cnot", "C->R");
    if (flip) {
        psi = apply_operator(psi, pauli_x(), {"C"});
        ev(t, "charlie", "apply_basis_swap", "X on C");
    }

    auto povm = discrimination_povm(c);
    auto step3 = enumerate_povm(psi, povm, {"C"});
    const int o = sel.select("charlie_discrimination", povm.outcome_labels, probabilities(step3));
    ev(t, "charlie", "measure_discrimination", povm.outcome_labels[o]);
    if (step3[o].probability <= kProbFloor) {
        finalize_zero(t);
        return t;
    }
    psi = step3[o].post_state;

    if (!povm.conclusive_mask[o]) {
        ev(t, "charlie", "abort", "inconclusive");
        finalize(t, psi, "R", q, false);
        return t;
    }
    if (o == 1) {
        psi = apply_operator(psi, pauli_z(), {"R"});
        ev(t, "charlie", "apply_correction", "Z");
    }
    finalize(t, psi, "R", q, true);
    return t;
}

SecretShareTrace hbb_secret_share(const InputQubit& q, Rng& rng) {
    SamplingSelector sel(rng);
    return hbb_secret_share(q, sel);
}

SecretShareTrace css1(const InputQubit& q, const ChannelSpec& c, AliceMethod method, Rng& rng) {
    SamplingSelector sel(rng);
    return css1(q, c, method, sel);
}

SecretShareTrace css2(const InputQubit& q, const ChannelSpec& c, Rng& rng) {
    SamplingSelector sel(rng);
    return css2(q, c, sel);
}

SecretShareTrace css3(const InputQubit& q, const ChannelSpec& c, Rng& rng) {
    SamplingSelector sel(rng);
    return css3(q, c, sel);
}

}  // namespace qpsim
