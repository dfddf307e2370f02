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

#include "qpsim/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qpsim/analysis.hpp"
#include "qpsim/serialize.hpp"

namespace qpsim {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;

const std::vector<double>& beta_grid() {
    static const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, kHalfSqrt2};
    return grid;
}

const std::vector<std::string>& conclusive_ids() {
    static const std::vector<std::string> ids = {"mh",   "qact1", "qact2", "css1_mh",
                                                 "css1_qact1", "css2", "css3"};
    return ids;
}

const std::vector<std::string>& secret_ids() {
    static const std::vector<std::string> ids = {"hbb", "css1_mh", "css1_qact1", "css2", "css3"};
    return ids;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

ChannelSpec channel_for(const std::string& id, double beta) {
    return id == "hbb" ? ChannelSpec::maximal() : ChannelSpec::from_beta(beta);
}

// Mass of the branches whose path starts with the given outcome label.
double mass_with_prefix(const OutcomeDistribution& d, const std::string& first,
                        bool conclusive_only = false) {
    double p = 0.0;
    for (const auto& b : d.branches) {
        if (b.path.empty() || b.path.front() != first) {
            continue;
        }
        if (conclusive_only && !(b.path.size() > 1 && b.path[1].rfind("conclusive", 0) == 0)) {
            continue;
        }
        p += b.probability;
    }
    return p;
}

}  // namespace

std::vector<CriterionResult> run_verification() {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    std::vector<CriterionResult> results;
    auto add = [&](std::string name, bool pass, std::string detail) {
        results.push_back({std::move(name), pass, std::move(detail)});
    };

    const InputQubit ref = reference_input();
    const InputQubit balanced(Complex{kHalfSqrt2, 0.0}, Complex{kHalfSqrt2, 0.0});

    // 1. Every conclusive protocol succeeds with probability exactly 2*beta^2.
    {
        double worst = 0.0;
        for (const auto& id : conclusive_ids()) {
            for (double beta : beta_grid()) {
                const double p = success_probability(id, ChannelSpec::from_beta(beta));
                worst = std::max(worst, std::abs(p - 2.0 * beta * beta));
            }
        }
        add("success probability equals 2*beta^2 for all conclusive protocols", worst <= 1e-10,
            "max |p - 2 beta^2| = " + fmt(worst) + " over 7 protocols x 7 beta (tol 1e-10)");
    }

    // 2. Branch structure of the three-qubit-measurement scheme (balanced
    //    input): four rank-1 branches of alpha^2 beta^2 / 2 each, two rank-2
    //    subspaces of (alpha^4 + beta^4) / 2 each.
    {
        double worst = 0.0;
        for (double beta : beta_grid()) {
            const ChannelSpec c = ChannelSpec::from_beta(beta);
            const double a2 = c.alpha * c.alpha, b2 = beta * beta;
            const auto d = enumerate_protocol("qact1", balanced, c);
            for (const char* label : {"sym_010_101", "asym_010_101", "sym_001_110",
                                      "asym_001_110"}) {
                worst = std::max(worst, std::abs(mass_with_prefix(d, label) - a2 * b2 / 2.0));
            }
            const double span = (a2 * a2 + b2 * b2) / 2.0;
            worst = std::max(worst, std::abs(mass_with_prefix(d, "span_000_111") - span));
            worst = std::max(worst, std::abs(mass_with_prefix(d, "span_011_100") - span));
        }
        add("rank-1 branches carry alpha^2 beta^2/2, rank-2 subspaces (alpha^4+beta^4)/2",
            worst <= 1e-10, "max deviation = " + fmt(worst) + " (tol 1e-10)");
    }

    // 3. Conclusive fraction inside a rank-2 subspace: 2 beta^4/(alpha^4+beta^4).
    {
        double worst = 0.0;
        for (double beta : beta_grid()) {
            const ChannelSpec c = ChannelSpec::from_beta(beta);
            const double a2 = c.alpha * c.alpha, b2 = beta * beta;
            const double expected = 2.0 * b2 * b2 / (a2 * a2 + b2 * b2);
            const auto d = enumerate_protocol("qact1", balanced, c);
            for (const char* label : {"span_000_111", "span_011_100"}) {
                const double sub = mass_with_prefix(d, label);
                const double con = mass_with_prefix(d, label, /*conclusive_only=*/true);
                worst = std::max(worst, std::abs(con / sub - expected));
            }
        }
        add("conclusive fraction in a rank-2 subspace equals 2 beta^4/(alpha^4+beta^4)",
            worst <= 1e-10, "max deviation = " + fmt(worst) + " (tol 1e-10)");
    }

    // 4. Whenever a protocol declares success, the receiver holds the input
    //    state exactly.
    {
        double worst = 0.0;
        Rng rng(0xF1DE0004u);
        for (const auto& id : protocol_ids()) {
            for (double beta : beta_grid()) {
                if (id == "hbb" && std::abs(beta - kHalfSqrt2) > 1e-15) {
                    continue;
                }
                const ChannelSpec c = channel_for(id, beta);
                for (int i = 0; i < 100; ++i) {
                    const auto d = enumerate_protocol(id, random_input(rng), c);
                    for (const auto& b : d.branches) {
                        if (b.success) {
                            worst = std::max(worst, std::abs(b.fidelity - 1.0));
                        }
                    }
                }
            }
        }
        add("every success-flagged branch has fidelity one", worst <= 1e-10,
            "max |F - 1| = " + fmt(worst) + " over 100 random inputs x protocols x beta grid");
    }

    // 5. Standard scheme baseline: four equiprobable Bell branches with
    //    fidelity one on the maximal channel; on a non-maximal channel the
    //    phi_plus branch leaves the receiver with (a alpha, b beta).
    {
        double worst_max = 0.0;
        Rng rng(0xF1DE0005u);
        for (int i = 0; i < 5; ++i) {
            const auto d = enumerate_protocol("standard", random_input(rng), ChannelSpec::maximal());
            for (const auto& b : d.branches) {
                worst_max = std::max(worst_max, std::abs(b.probability - 0.25));
                worst_max = std::max(worst_max, std::abs(b.fidelity - 1.0));
            }
        }
        double worst_prop = 0.0;
        const ChannelSpec c = ChannelSpec::from_beta(0.6);
        for (int i = 0; i < 5; ++i) {
            const InputQubit q = random_input(rng);
            StateVector psi = tensor(q.as_state("1"), channel_state(c));
            auto branches = enumerate_projective(psi, bell_measurement(), {"1", "A"});
            StateVector bob = extract_qubit(branches[0].post_state, "B");
            Vector target(2);
            target << q.a * c.alpha, q.b * c.beta;
            target.normalize();
            Complex overlap = bob.amps.dot(target);
            Vector aligned = bob.amps * (overlap / std::abs(overlap));
            worst_prop = std::max(worst_prop, (aligned - target).cwiseAbs().maxCoeff());
        }
        add("standard scheme: 1/4 Bell branches (maximal); phi_plus leaves (a*alpha, b*beta)",
            worst_max <= 1e-10 && worst_prop <= 1e-12,
            "max branch deviation = " + fmt(worst_max) + " (tol 1e-10), max amplitude deviation = " +
                fmt(worst_prop) + " (tol 1e-12)");
    }

    // 6. Classical bit accounting, exact integers.
    {
        bool ok = true;
        std::string bad;
        auto expect = [&](bool cond, const std::string& what) {
            if (!cond && ok) {
                ok = false;
                bad = what;
            }
        };
        const ChannelSpec c = ChannelSpec::from_beta(0.6);
        for (const auto& b : enumerate_protocol("mh", ref, c).branches) {
            expect(b.bits.at("alice_to_bob") == 3 && b.bits.at("bob_to_alice") == 0,
                   "mh sends 3 bits");
        }
        for (const auto& b : enumerate_protocol("qact1", ref, c).branches) {
            const bool rank2 = b.path.front().rfind("span_", 0) == 0;
            expect(b.bits.at("alice_to_bob") == (rank2 ? 3 : 2), "qact1 sends 2 or 3 bits");
        }
        for (const auto& b : enumerate_protocol("qact2", ref, c).branches) {
            expect(b.bits.at("alice_to_bob") == 2 && b.bits.at("bob_to_alice") == 0,
                   "qact2 sends 2 bits, nothing back");
        }
        for (const auto& b : enumerate_protocol("hbb", ref, ChannelSpec::maximal()).branches) {
            expect(b.bits.at("alice_to_bob") == 2 && b.bits.at("alice_to_charlie") == 2 &&
                       b.bits.at("bob_to_charlie") == 1,
                   "hbb broadcast 2+2, Bob 1");
        }
        for (const auto& b : enumerate_protocol("css2", ref, c).branches) {
            expect(b.bits.at("alice_to_bob") == 2 && b.bits.at("alice_to_charlie") == 2,
                   "css2 broadcast 2+2");
            if (b.success) {
                expect(b.bits.at("bob_to_charlie") == 2, "css2 success costs Bob 2 bits");
            }
        }
        add("classical bit accounting (mh 3; qact1 2/3; qact2 2+0; hbb 2+2+1; css2 +2)", ok,
            ok ? "all per-branch counts exact" : "first failure: " + bad);
    }

    // 7. Discrimination POVM validity across the grid and both endpoints.
    {
        double worst = 0.0;
        std::vector<double> betas = beta_grid();
        betas.insert(betas.begin(), 0.0);
        for (double beta : betas) {
            const auto p = discrimination_povm(ChannelSpec::from_beta(beta));
            Matrix sum = Matrix::Zero(2, 2);
            for (std::size_t i = 0; i < p.elements.size(); ++i) {
                sum += p.elements[i].mat;
                worst = std::max(worst, (p.kraus[i].mat.adjoint() * p.kraus[i].mat -
                                         p.elements[i].mat)
                                            .cwiseAbs()
                                            .maxCoeff());
            }
            worst = std::max(worst, (sum - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff());
        }
        add("POVM completeness and Kraus consistency, including beta = 0 and beta = 1/sqrt(2)",
            worst <= 1e-10, "max deviation = " + fmt(worst) + " (tol 1e-10)");
    }

    // 8. No signaling: branch-averaged reduced state of the receiver equals
    //    the pre-measurement one at every communication cut.
    {
        double worst = 0.0;
        for (const auto& id : protocol_ids()) {
            for (double beta : {0.3, 0.6, kHalfSqrt2}) {
                worst = std::max(worst, no_signaling_deviation(id, ref, channel_for(id, beta)));
            }
        }
        add("no signaling across every protocol and communication cut", worst <= 1e-10,
            "max entry-wise deviation = " + fmt(worst) + " (tol 1e-10)");
    }

    // 9. Monte Carlo agrees with exact enumeration within 4 binomial standard
    //    deviations at 1e5 shots; identical seeds give byte-identical stats.
    {
        bool ok = true;
        double worst_sigma = 0.0;
        const std::uint64_t shots = 100000;
        const std::uint64_t seed = 20260809;
        for (const auto& id : protocol_ids()) {
            const ChannelSpec c = channel_for(id, 0.6);
            const double p = success_probability(id, c);
            const auto stats = monte_carlo(id, ref, c, shots, seed);
            const double freq = static_cast<double>(stats.successes) / shots;
            const double bound = 4.0 * std::sqrt(p * (1.0 - p) / shots);
            if (std::abs(freq - p) > bound) {
                ok = false;
            }
            if (bound > 0.0) {
                worst_sigma = std::max(worst_sigma, std::abs(freq - p) / (bound / 4.0));
            } else if (stats.successes != (p >= 0.5 ? shots : 0)) {
                ok = false;
            }
            const auto again = monte_carlo(id, ref, c, shots, seed);
            if (to_json(stats).dump() != to_json(again).dump()) {
                ok = false;
            }
        }
        add("1e5-shot Monte Carlo within 4 sigma of exact; reruns byte-identical", ok,
            "worst |freq - p| = " + fmt(worst_sigma) + " sigma (bound 4)");
    }

    // 10. Before Bob's message, Charlie's reduced state carries no phase
    //     information: off-diagonals vanish in every branch.
    {
        double worst = 0.0;
        Rng rng(0xF1DE000Au);
        for (const auto& id : secret_ids()) {
            const ChannelSpec c = channel_for(id, 0.6);
            for (int i = 0; i < 50; ++i) {
                worst = std::max(worst, secrecy_offdiagonal(id, random_input(rng), c));
            }
        }
        add("no phase information reaches Charlie before Bob's message", worst <= 1e-10,
            "max |off-diagonal| = " + fmt(worst) + " over 50 random inputs x 5 protocols");
    }

    // 11. The suite itself stays within its time budget.
    {
        const double elapsed =
            std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0).count();
        add("verification completes in under 60 seconds", elapsed < 60.0,
            "elapsed " + fmt(elapsed) + " s");
    }

    return results;
}

}  // namespace qpsim
