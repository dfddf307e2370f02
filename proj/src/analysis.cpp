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

#include "qpsim/analysis.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "qpsim/errors.hpp"

namespace qpsim {

namespace {

/// Follows a scripted prefix of branch choices, takes branch 0 beyond it,
/// and records every decision point it passes. One run per leaf turns any
/// selector-driven protocol into an exact probability tree.
class ReplaySelector final : public OutcomeSelector {
  public:
    explicit ReplaySelector(std::vector<int> script) : script_(std::move(script)) {}

    int select(const std::string&, const std::vector<std::string>& outcome_labels,
               const std::vector<double>& probabilities) override {
        const int choice = depth_ < script_.size() ? script_[depth_] : 0;
        decisions_.push_back({outcome_labels, probabilities, choice});
        ++depth_;
        return choice;
    }

    struct Decision {
        std::vector<std::string> labels;
        std::vector<double> probs;
        int chosen;
    };
    const std::vector<Decision>& decisions() const { return decisions_; }

  private:
    std::vector<int> script_;
    std::size_t depth_ = 0;
    std::vector<Decision> decisions_;
};

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) {
            out += '/';
        }
        out += path[i];
    }
    return out;
}

int bits_total(const std::map<std::string, int>& bits) {
    int total = 0;
    for (const auto& [channel, n] : bits) {
        total += n;
    }
    return total;
}

struct WeightedState {
    double p;
    StateVector s;
};

// Alice's complete measurement tree for the teleport protocols, before any
// classical message leaves her lab. Rebuilt from the measurement primitives
// on purpose: it double-checks the protocol implementations.
std::vector<WeightedState> sender_tree_teleport(const std::string& id, const InputQubit& q,
                                                const ChannelSpec& c) {
    std::vector<WeightedState> leaves;
    if (id == "standard" || id == "qact2") {
        StateVector psi = tensor(q.as_state("1"), channel_state(c));
        for (const auto& b : enumerate_projective(psi, bell_measurement(), {"1", "A"})) {
            if (b.probability > kProbFloor) {
                leaves.push_back({b.probability, b.post_state});
            }
        }
    } else if (id == "mh") {
        StateVector psi = tensor(q.as_state("1"), channel_state(c));
        auto povm = discrimination_povm(c);
        auto step1 = enumerate_projective(psi, parity_measurement(), {"1", "A"});
        for (int s = 0; s < 2; ++s) {
            if (step1[s].probability <= kProbFloor) {
                continue;
            }
            auto [e0, e1] = parity_subspace_basis(s);
            StateVector coords = contract_subspace(step1[s].post_state, {"1", "A"}, e0, e1, "m");
            for (const auto& b : enumerate_povm(coords, povm, {"m"})) {
                if (b.probability > kProbFloor) {
                    leaves.push_back({step1[s].probability * b.probability, b.post_state});
                }
            }
        }
    } else if (id == "qact1") {
        StateVector psi = tensor(tensor(q.as_state("1"), single_qubit(c.alpha, c.beta, "2")),
                                 channel_state(c));
        auto povm = discrimination_povm(derived_schmidt(c).as_channel());
        auto step1 = enumerate_projective(psi, qact1_measurement(), {"1", "2", "A"});
        for (int k = 0; k < 6; ++k) {
            if (step1[k].probability <= kProbFloor) {
                continue;
            }
            if (k >= 2) {
                leaves.push_back({step1[k].probability, step1[k].post_state});
                continue;
            }
            auto [e0, e1] = triple_subspace_basis(k);
            StateVector coords =
                contract_subspace(step1[k].post_state, {"1", "2", "A"}, e0, e1, "m");
            for (const auto& b : enumerate_povm(coords, povm, {"m"})) {
                if (b.probability > kProbFloor) {
                    leaves.push_back({step1[k].probability * b.probability, b.post_state});
                }
            }
        }
    } else {
        throw UnknownProtocolError("not a teleport protocol: " + id);
    }
    return leaves;
}

struct Stage1Leaf {
    double p;
    StateVector s;  // post-measurement, corrections not yet applied
    int flip;
    int phase;
    bool conclusive;
};

// Dealer stage of the secret-sharing protocols, again rebuilt independently.
std::vector<Stage1Leaf> stage1_leaves(const std::string& id, const InputQubit& q,
                                      const ChannelSpec& c) {
    std::vector<Stage1Leaf> leaves;
    if (id == "hbb" || id == "css2" || id == "css3") {
        ChannelSpec ch = id == "hbb" ? ChannelSpec::maximal() : c;
        StateVector psi = tensor(q.as_state("1"), tripartite_state(ch));
        auto step1 = enumerate_projective(psi, bell_measurement(), {"1", "A"});
        for (int k = 0; k < 4; ++k) {
            if (step1[k].probability > kProbFloor) {
                leaves.push_back(
                    {step1[k].probability, step1[k].post_state, (k >> 1) & 1, k & 1, true});
            }
        }
    } else if (id == "css1_mh") {
        StateVector psi = tensor(q.as_state("1"), tripartite_state(c));
        auto povm = discrimination_povm(c);
        auto step1 = enumerate_projective(psi, parity_measurement(), {"1", "A"});
        for (int s = 0; s < 2; ++s) {
            if (step1[s].probability <= kProbFloor) {
                continue;
            }
            auto [e0, e1] = parity_subspace_basis(s);
            StateVector coords = contract_subspace(step1[s].post_state, {"1", "A"}, e0, e1, "m");
            auto step2 = enumerate_povm(coords, povm, {"m"});
            for (int o = 0; o < 3; ++o) {
                if (step2[o].probability > kProbFloor) {
                    leaves.push_back({step1[s].probability * step2[o].probability,
                                      step2[o].post_state, s, o == 1 ? 1 : 0,
                                      povm.conclusive_mask[o]});
                }
            }
        }
    } else if (id == "css1_qact1") {
        StateVector psi = tensor(tensor(q.as_state("1"), single_qubit(c.alpha, c.beta, "2")),
                                 tripartite_state(c));
        auto povm = discrimination_povm(derived_schmidt(c).as_channel());
        auto step1 = enumerate_projective(psi, qact1_measurement(), {"1", "2", "A"});
        for (int k = 0; k < 6; ++k) {
            if (step1[k].probability <= kProbFloor) {
                continue;
            }
            if (k >= 2) {
                auto [flip, phase] = qact1_direct_correction(k);
                leaves.push_back({step1[k].probability, step1[k].post_state, flip, phase, true});
                continue;
            }
            auto [e0, e1] = triple_subspace_basis(k);
            StateVector coords =
                contract_subspace(step1[k].post_state, {"1", "2", "A"}, e0, e1, "m");
            auto step2 = enumerate_povm(coords, povm, {"m"});
            for (int o = 0; o < 3; ++o) {
                if (step2[o].probability > kProbFloor) {
                    leaves.push_back({step1[k].probability * step2[o].probability,
                                      step2[o].post_state, k, o == 1 ? 1 : 0,
                                      povm.conclusive_mask[o]});
                }
            }
        }
    } else {
        throw UnknownProtocolError("not a secret-sharing protocol: " + id);
    }
    return leaves;
}

bool is_secret_sharing(const std::string& id) {
    return id == "hbb" || id == "css1_mh" || id == "css1_qact1" || id == "css2" || id == "css3";
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

double OutcomeDistribution::success_probability() const {
    double p = 0.0;
    for (const auto& b : branches) {
        if (b.success) {
            p += b.probability;
        }
    }
    return p;
}

double OutcomeDistribution::expected_bits_total() const {
    double e = 0.0;
    for (const auto& b : branches) {
        e += b.probability * bits_total(b.bits);
    }
    return e;
}

double OutcomeDistribution::fidelity_given_success() const {
    double p = 0.0;
    double f = 0.0;
    for (const auto& b : branches) {
        if (b.success) {
            p += b.probability;
            f += b.probability * b.fidelity;
        }
    }
    return p > 0.0 ? f / p : std::numeric_limits<double>::quiet_NaN();
}

void OutcomeDistribution::validate() const {
    double total = 0.0;
    for (const auto& b : branches) {
        if (b.probability < 0.0) {
            throw Error("negative branch probability");
        }
        total += b.probability;
        if (b.success && std::abs(b.fidelity - 1.0) > kInvariantTol) {
            throw Error("success branch with fidelity != 1 in " + protocol_id);
        }
    }
    if (std::abs(total - 1.0) > kInvariantTol) {
        throw Error("branch probabilities of " + protocol_id + " sum to " + std::to_string(total));
    }
}

const std::vector<std::string>& protocol_ids() {
    static const std::vector<std::string> ids = {"standard", "mh",      "qact1",
                                                 "qact2",    "hbb",     "css1_mh",
                                                 "css1_qact1", "css2",  "css3"};
    return ids;
}

ProtocolTrace run_protocol(const std::string& id, const InputQubit& q, const ChannelSpec& c,
                           OutcomeSelector& sel) {
    if (id == "standard") {
        return standard_teleport(q, c, sel);
    }
    if (id == "mh") {
        return mh_teleport(q, c, sel);
    }
    if (id == "qact1") {
        return qact1_teleport(q, c, sel);
    }
    if (id == "qact2") {
        return qact2_teleport(q, c, sel);
    }
    if (id == "hbb") {
        if (!c.is_maximal()) {
            throw BadSpecError("hbb runs on the maximally entangled channel only");
        }
        return hbb_secret_share(q, sel);
    }
    if (id == "css1_mh") {
        return css1(q, c, AliceMethod::MH, sel);
    }
    if (id == "css1_qact1") {
        return css1(q, c, AliceMethod::QACT1, sel);
    }
    if (id == "css2") {
        return css2(q, c, sel);
    }
    if (id == "css3") {
        return css3(q, c, sel);
    }
    throw UnknownProtocolError("unknown protocol id: " + id);
}

ProtocolTrace run_protocol(const std::string& id, const InputQubit& q, const ChannelSpec& c,
                           Rng& rng) {
    SamplingSelector sel(rng);
    return run_protocol(id, q, c, sel);
}

OutcomeDistribution enumerate_protocol(const std::string& id, const InputQubit& q,
                                       const ChannelSpec& c) {
    OutcomeDistribution dist;
    dist.protocol_id = id;

    std::vector<std::vector<int>> pending{{}};
    while (!pending.empty()) {
        std::vector<int> prefix = std::move(pending.back());
        pending.pop_back();

        ReplaySelector sel(prefix);
        ProtocolTrace t = run_protocol(id, q, c, sel);
        const auto& decisions = sel.decisions();

        OutcomeBranch br;
        double p = 1.0;
        std::vector<int> chosen;
        chosen.reserve(decisions.size());
        for (const auto& d : decisions) {
            p *= d.probs[d.chosen];
            br.path.push_back(d.labels[d.chosen]);
            chosen.push_back(d.chosen);
        }
        br.probability = t.zero_probability ? 0.0 : p;
        br.success = t.success;
        br.fidelity = t.fidelity;
        br.bits = t.bits;
        dist.branches.push_back(std::move(br));

        // Queue every sibling of the decisions made past the forced prefix.
        for (std::size_t d = prefix.size(); d < decisions.size(); ++d) {
            for (int alt = 1; alt < static_cast<int>(decisions[d].probs.size()); ++alt) {
                std::vector<int> next(chosen.begin(), chosen.begin() + d);
                next.push_back(alt);
                pending.push_back(std::move(next));
            }
        }
    }
    dist.validate();
    return dist;
}

double success_probability(const std::string& id, const ChannelSpec& c) {
    const double p_ref = enumerate_protocol(id, reference_input(), c).success_probability();
    Rng rng(0x5eed0001u);
    for (int i = 0; i < 5; ++i) {
        const double p_i = enumerate_protocol(id, random_input(rng), c).success_probability();
        if (std::abs(p_i - p_ref) > kInvariantTol) {
            throw Error("success probability of " + id + " depends on the input state");
        }
    }
    return p_ref;
}

SampleStats monte_carlo(const std::string& id, const InputQubit& q, const ChannelSpec& c,
                        std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw BadSpecError("monte_carlo needs shots >= 1");
    }
    SampleStats st;
    st.shots = shots;
    st.seed = seed;
    double fid_sum = 0.0;
    for (std::uint64_t i = 0; i < shots; ++i) {
        Rng rng = Rng::for_shot(seed, i);
        SamplingSelector sel(rng);
        ProtocolTrace t = run_protocol(id, q, c, sel);
        st.successes += t.success ? 1 : 0;
        fid_sum += t.fidelity;
        ++st.branch_frequencies[join_path(sel.path())];
    }
    st.mean_fidelity = fid_sum / static_cast<double>(shots);
    return st;
}

BitReport bit_report(const OutcomeDistribution& d) {
    BitReport r;
    double p_success = 0.0;
    for (const auto& b : d.branches) {
        r.per_branch.push_back({b.path, b.probability, b.success, b.bits, bits_total(b.bits)});
        for (const auto& [channel, n] : b.bits) {
            r.expected[channel] += b.probability * n;
            if (b.success) {
                r.expected_given_success[channel] += b.probability * n;
            }
        }
        r.expected_total += b.probability * bits_total(b.bits);
        if (b.success) {
            p_success += b.probability;
            r.expected_total_given_success += b.probability * bits_total(b.bits);
        }
    }
    if (p_success > 0.0) {
        for (auto& [channel, e] : r.expected_given_success) {
            e /= p_success;
        }
        r.expected_total_given_success /= p_success;
    } else {
        r.expected_given_success.clear();
        r.expected_total_given_success = 0.0;
    }
    return r;
}

double no_signaling_deviation(const std::string& id, const InputQubit& q, const ChannelSpec& c) {
    double dev = 0.0;

    if (!is_secret_sharing(id)) {
        StateVector psi0 = id == "qact1"
                               ? tensor(tensor(q.as_state("1"), single_qubit(c.alpha, c.beta, "2")),
                                        channel_state(c))
                               : tensor(q.as_state("1"), channel_state(c));
        const Matrix pre = reduced_density(psi0, {"B"}).mat;
        Matrix avg = Matrix::Zero(2, 2);
        for (const auto& leaf : sender_tree_teleport(id, q, c)) {
            avg += leaf.p * reduced_density(leaf.s, {"B"}).mat;
        }
        return max_abs(avg - pre);
    }

    const ChannelSpec ch = id == "hbb" ? ChannelSpec::maximal() : c;
    StateVector psi0 = id == "css1_qact1"
                           ? tensor(tensor(q.as_state("1"), single_qubit(ch.alpha, ch.beta, "2")),
                                    tripartite_state(ch))
                           : tensor(q.as_state("1"), tripartite_state(ch));

    // Cut 1: dealer has measured, nothing announced yet.
    const Matrix pre = reduced_density(psi0, {"C"}).mat;
    auto leaves = stage1_leaves(id, q, ch);
    Matrix avg = Matrix::Zero(2, 2);
    for (const auto& leaf : leaves) {
        avg += leaf.p * reduced_density(leaf.s, {"C"}).mat;
    }
    dev = max_abs(avg - pre);

    // Cut 2: Bob has measured, his message to Charlie not yet sent. The
    // dealer's corrections are public by now, so they are applied first.
    for (const auto& leaf : leaves) {
        if (!leaf.conclusive) {
            continue;  // protocol aborted; Bob never measures
        }
        StateVector corrected = apply_dealer_corrections(leaf.s, leaf.flip, leaf.phase, "B", "C");
        const Matrix mid = reduced_density(corrected, {"C"}).mat;
        Matrix avg2 = Matrix::Zero(2, 2);
        if (id == "css2") {
            if (leaf.flip) {
                corrected = apply_operator(corrected, pauli_x(), {"B"});
            }
            for (const auto& b : enumerate_povm(corrected, discrimination_povm(ch), {"B"})) {
                if (b.probability > kProbFloor) {
                    avg2 += b.probability * reduced_density(b.post_state, {"C"}).mat;
                }
            }
        } else {
            for (const auto& b : enumerate_projective(corrected, x_measurement(), {"B"})) {
                if (b.probability > kProbFloor) {
                    avg2 += b.probability * reduced_density(b.post_state, {"C"}).mat;
                }
            }
        }
        dev = std::max(dev, max_abs(avg2 - mid));
    }
    return dev;
}

double secrecy_offdiagonal(const std::string& id, const InputQubit& q, const ChannelSpec& c) {
    if (!is_secret_sharing(id)) {
        throw UnknownProtocolError("secrecy check applies to secret-sharing protocols only");
    }
    const ChannelSpec ch = id == "hbb" ? ChannelSpec::maximal() : c;
    double worst = 0.0;
    for (const auto& leaf : stage1_leaves(id, q, ch)) {
        StateVector s = leaf.conclusive
                            ? apply_dealer_corrections(leaf.s, leaf.flip, leaf.phase, "B", "C")
                            : leaf.s;
        const Matrix rho = reduced_density(s, {"C"}).mat;
        worst = std::max(worst, std::abs(rho(0, 1)));
    }
    return worst;
}

}  // namespace qpsim
