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
#include <map>
#include <string>
#include <vector>

#include "qpsim/secretshare.hpp"

namespace qpsim {

/// One leaf of the exact probability tree of a protocol.
struct OutcomeBranch {
    std::vector<std::string> path;  // canonical outcome labels, stage by stage
    double probability = 0.0;
    bool success = false;
    double fidelity = 0.0;
    std::map<std::string, int> bits;
};

struct OutcomeDistribution {
    std::string protocol_id;
    std::vector<OutcomeBranch> branches;

    double success_probability() const;
    double expected_bits_total() const;
    double fidelity_given_success() const;  // NaN when nothing succeeds
    /// Internal consistency: probabilities sum to one, success implies
    /// fidelity one. Throws Error.
    void validate() const;
};

struct SampleStats {
    std::uint64_t shots = 0;
    std::uint64_t successes = 0;
    double mean_fidelity = 0.0;
    std::map<std::string, std::uint64_t> branch_frequencies;  // "/"-joined paths
    std::uint64_t seed = 0;
};

struct BitReport {
    struct Row {
        std::vector<std::string> path;
        double probability = 0.0;
        bool success = false;
        std::map<std::string, int> bits;
        int total = 0;
    };
    std::vector<Row> per_branch;
    std::map<std::string, double> expected;                // unconditional
    std::map<std::string, double> expected_given_success;  // empty if p(success)=0
    double expected_total = 0.0;
    double expected_total_given_success = 0.0;
};

/// All protocol identifiers accepted by the functions below:
/// standard, mh, qact1, qact2, hbb, css1_mh, css1_qact1, css2, css3.
const std::vector<std::string>& protocol_ids();

/// Dispatch by identifier. "hbb" demands the maximal channel.
/// Throws UnknownProtocolError on anything not listed by protocol_ids().
ProtocolTrace run_protocol(const std::string& id, const InputQubit& q, const ChannelSpec& c,
                           OutcomeSelector& sel);
ProtocolTrace run_protocol(const std::string& id, const InputQubit& q, const ChannelSpec& c,
                           Rng& rng);

/// Exact branch enumeration: every measurement in the protocol expands into
/// all of its outcomes, including probability-zero ones.
OutcomeDistribution enumerate_protocol(const std::string& id, const InputQubit& q,
                                       const ChannelSpec& c);

/// Exact success probability, computed with the reference input and then
/// asserted identical (within tolerance) for five random inputs.
double success_probability(const std::string& id, const ChannelSpec& c);

/// Seeded sampling; per-shot streams derive from (seed, shot) as documented
/// in Rng::for_shot, so results are reproducible and order-independent.
SampleStats monte_carlo(const std::string& id, const InputQubit& q, const ChannelSpec& c,
                        std::uint64_t shots, std::uint64_t seed);

/// Classical-communication accounting, per branch and in expectation.
BitReport bit_report(const OutcomeDistribution& d);

/// Largest entry-wise deviation between the receiver's branch-averaged
/// reduced density matrix before any classical message reaches them and
/// their pre-measurement reduced density. For the secret-sharing protocols
/// both communication cuts (dealer broadcast, Bob-to-Charlie) are checked
/// and the worse one is returned. Physics says zero; this re-derives the
/// protocol trees from the measurement primitives as an independent check.
double no_signaling_deviation(const std::string& id, const InputQubit& q, const ChannelSpec& c);

/// Largest off-diagonal magnitude of Charlie's reduced density across all
/// branches at the point before Bob communicates with him. Secret-sharing
/// identifiers only.
double secrecy_offdiagonal(const std::string& id, const InputQubit& q, const ChannelSpec& c);

}  // namespace qpsim
