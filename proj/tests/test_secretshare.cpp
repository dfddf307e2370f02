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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qpsim/analysis.hpp"
#include "qpsim/secretshare.hpp"

using namespace qpsim;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Forces a protocol down a fixed branch sequence (padding with outcome 0).
class ForcedSelector final : public OutcomeSelector {
  public:
    explicit ForcedSelector(std::vector<int> picks) : picks_(std::move(picks)) {}
    int select(const std::string&, const std::vector<std::string>&,
               const std::vector<double>&) override {
        return depth_ < picks_.size() ? picks_[depth_++] : (++depth_, 0);
    }

  private:
    std::vector<int> picks_;
    std::size_t depth_ = 0;
};

Matrix bc_target(Complex a, Complex b) {
    Vector v = Vector::Zero(4);
    v[0] = a;
    v[3] = b;
    return pure_density(make_state(v, {"B", "C"})).mat;
}

}  // namespace

TEST_CASE("tripartite_state realizes the three-party Schmidt form") {
    auto ghz = tripartite_state(ChannelSpec::maximal());
    CHECK(ghz.amps[0].real() == doctest::Approx(kInvSqrt2));
    CHECK(ghz.amps[7].real() == doctest::Approx(kInvSqrt2));
    CHECK(ghz.labels == std::vector<std::string>{"A", "B", "C"});

    CHECK(tripartite_state(ChannelSpec{1.0, 0.0}).amps[0] == Complex{1.0, 0.0});

    auto skew = tripartite_state(ChannelSpec{0.8, 0.6});
    for (Eigen::Index i = 1; i < 7; ++i) {
        CHECK(std::abs(skew.amps[i]) < 1e-15);
    }
}

TEST_CASE("GHZ splitting always hands Charlie the exact state") {
    Rng rng(400);
    for (int trial = 0; trial < 10; ++trial) {
        const auto d = enumerate_protocol("hbb", random_input(rng), ChannelSpec::maximal());
        REQUIRE(d.branches.size() == 8);  // four Bell outcomes times two x outcomes
        for (const auto& b : d.branches) {
            CHECK(b.probability == doctest::Approx(0.125).epsilon(1e-12));
            CHECK(b.success);
            CHECK(b.fidelity == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(b.bits.at("alice_to_bob") == 2);
            CHECK(b.bits.at("alice_to_charlie") == 2);
            CHECK(b.bits.at("bob_to_charlie") == 1);
        }
    }
}

TEST_CASE("dealer stage leaves Bob and Charlie with a|00> + b|11>") {
    Rng rng(401);
    for (int trial = 0; trial < 5; ++trial) {
        const InputQubit q = random_input(rng);
        StateVector psi = tensor(q.as_state("1"), tripartite_state(ChannelSpec::maximal()));
        auto branches = enumerate_projective(psi, bell_measurement(), {"1", "A"});
        for (int k = 0; k < 4; ++k) {
            StateVector corrected =
                apply_dealer_corrections(branches[k].post_state, (k >> 1) & 1, k & 1, "B", "C");
            const Matrix rho = reduced_density(corrected, {"B", "C"}).mat;
            CHECK((rho - bc_target(q.a, q.b)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    // Basis input pins the pair to |00>.
    StateVector psi =
        tensor(InputQubit(Complex{1, 0}, Complex{0, 0}).as_state("1"),
               tripartite_state(ChannelSpec::maximal()));
    auto branches = enumerate_projective(psi, bell_measurement(), {"1", "A"});
    StateVector corrected = apply_dealer_corrections(branches[0].post_state, 0, 0, "B", "C");
    const Matrix rho = reduced_density(corrected, {"B", "C"}).mat;
    CHECK(rho(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Bob's x outcomes are equiprobable and Charlie's marginal is phaseless") {
    Rng rng(402);
    for (int trial = 0; trial < 10; ++trial) {
        const InputQubit q = random_input(rng);
        const auto d = enumerate_protocol("hbb", q, ChannelSpec::maximal());
        double x_plus = 0.0;
        for (const auto& b : d.branches) {
            if (b.path.size() > 1 && b.path[1] == "x_plus") {
                x_plus += b.probability;
            }
        }
        CHECK(x_plus == doctest::Approx(0.5).epsilon(1e-10));

        // After the dealer's broadcast Charlie knows the amplitudes only.
        StateVector psi = tensor(q.as_state("1"), tripartite_state(ChannelSpec::maximal()));
        auto branches = enumerate_projective(psi, bell_measurement(), {"1", "A"});
        StateVector corrected =
            apply_dealer_corrections(branches[0].post_state, 0, 0, "B", "C");
        const Matrix rho_c = reduced_density(corrected, {"C"}).mat;
        CHECK(rho_c(0, 0).real() == doctest::Approx(std::norm(q.a)).epsilon(1e-10));
        CHECK(rho_c(1, 1).real() == doctest::Approx(std::norm(q.b)).epsilon(1e-10));
        CHECK(std::abs(rho_c(0, 1)) < 1e-10);

        // Neither share alone reproduces the secret when both amplitudes live.
        if (std::norm(q.a) > 0.05 && std::norm(q.b) > 0.05) {
            const DensityMatrix mc = reduced_density(corrected, {"C"});
            const DensityMatrix mb = reduced_density(corrected, {"B"});
            CHECK(expectation(mc, q.as_state("C")) < 1.0 - 1e-3);
            CHECK(expectation(mb, q.as_state("B")) < 1.0 - 1e-3);
        }
    }
}

TEST_CASE("conclusive secret sharing I succeeds with 2 beta^2 under both dealer methods") {
    Rng rng(403);
    for (double beta : {0.3, 0.6}) {
        const ChannelSpec c = ChannelSpec::from_beta(beta);
        for (const std::string id : {"css1_mh", "css1_qact1"}) {
            const auto d = enumerate_protocol(id, random_input(rng), c);
            CHECK(d.success_probability() == doctest::Approx(2 * beta * beta).epsilon(1e-10));
            for (const auto& b : d.branches) {
                if (b.success) {
                    CHECK(b.fidelity == doctest::Approx(1.0).epsilon(1e-10));
                    CHECK(b.bits.at("bob_to_charlie") == 1);
                }
            }
        }
    }
    for (const std::string id : {"css1_mh", "css1_qact1"}) {
        CHECK(enumerate_protocol(id, reference_input(), ChannelSpec::maximal())
                  .success_probability() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("conclusive dealer stage still reaches a|00> + b|11> exactly") {
    Rng rng(404);
    const ChannelSpec c = ChannelSpec::from_beta(0.6);
    for (int trial = 0; trial < 5; ++trial) {
        const InputQubit q = random_input(rng);
        StateVector psi = tensor(q.as_state("1"), tripartite_state(c));
        auto povm = discrimination_povm(c);
        auto step1 = enumerate_projective(psi, parity_measurement(), {"1", "A"});
        for (int s = 0; s < 2; ++s) {
            auto [e0, e1] = parity_subspace_basis(s);
            StateVector coords = contract_subspace(step1[s].post_state, {"1", "A"}, e0, e1, "m");
            auto step2 = enumerate_povm(coords, povm, {"m"});
            for (int o = 0; o < 2; ++o) {  // conclusive outcomes only
                StateVector corrected =
                    apply_dealer_corrections(step2[o].post_state, s, o, "B", "C");
                const Matrix rho = reduced_density(corrected, {"B", "C"}).mat;
                CHECK((rho - bc_target(q.a, q.b)).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }

    // Same identity when the dealer uses the three-qubit measurement with
    // her own ancilla.
    for (int trial = 0; trial < 3; ++trial) {
        const InputQubit q = random_input(rng);
        StateVector psi = tensor(tensor(q.as_state("1"), single_qubit(c.alpha, c.beta, "2")),
                                 tripartite_state(c));
        auto povm = discrimination_povm(derived_schmidt(c).as_channel());
        auto step1 = enumerate_projective(psi, qact1_measurement(), {"1", "2", "A"});
        for (int k = 0; k < 6; ++k) {
            if (k >= 2) {
                auto [flip, phase] = qact1_direct_correction(k);
                StateVector corrected =
                    apply_dealer_corrections(step1[k].post_state, flip, phase, "B", "C");
                const Matrix rho = reduced_density(corrected, {"B", "C"}).mat;
                CHECK((rho - bc_target(q.a, q.b)).cwiseAbs().maxCoeff() < 1e-12);
                continue;
            }
            auto [e0, e1] = triple_subspace_basis(k);
            StateVector coords =
                contract_subspace(step1[k].post_state, {"1", "2", "A"}, e0, e1, "m");
            auto step2 = enumerate_povm(coords, povm, {"m"});
            for (int o = 0; o < 2; ++o) {
                StateVector corrected =
                    apply_dealer_corrections(step2[o].post_state, k, o, "B", "C");
                const Matrix rho = reduced_density(corrected, {"B", "C"}).mat;
                CHECK((rho - bc_target(q.a, q.b)).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("conclusive secret sharing II: Bob discriminates, Charlie rotates") {
    Rng rng(405);
    const ChannelSpec c = ChannelSpec::from_beta(0.6);
    for (int trial = 0; trial < 5; ++trial) {
        const auto d = enumerate_protocol("css2", random_input(rng), c);
        CHECK(d.success_probability() == doctest::Approx(0.72).epsilon(1e-10));
        for (const auto& b : d.branches) {
            CHECK(b.bits.at("alice_to_bob") == 2);
            CHECK(b.bits.at("alice_to_charlie") == 2);
            CHECK(b.bits.at("bob_to_charlie") == (b.path[1].rfind("conclusive", 0) == 0 ? 2 : 1));
            if (b.success) {
                CHECK(b.fidelity == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
    }

    // A plus-type conclusive result needs no rotation from Charlie; the
    // minus-type one needs exactly a Z.
    const InputQubit q = reference_input();
    ForcedSelector plus({0, 0});
    const auto t_plus = css2(q, c, plus);
    CHECK(t_plus.success);
    CHECK(t_plus.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& e : t_plus.events) {
        CHECK_FALSE((e.party == "charlie" && e.action == "apply_correction"));
    }
    ForcedSelector minus({0, 1});
    const auto t_minus = css2(q, c, minus);
    CHECK(t_minus.success);
    CHECK(t_minus.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    bool charlie_rotated = false;
    for (const auto& e : t_minus.events) {
        charlie_rotated |= e.party == "charlie" && e.action == "apply_correction" &&
                           e.outcome == "Z";
    }
    CHECK(charlie_rotated);

    CHECK(enumerate_protocol("css2", q, ChannelSpec::from_beta(0.0)).success_probability() ==
          doctest::Approx(0.0));
}

TEST_CASE("conclusive secret sharing III: Charlie repairs locally") {
    Rng rng(406);
    for (double beta : {0.3, 0.6}) {
        const ChannelSpec c = ChannelSpec::from_beta(beta);
        const auto d = enumerate_protocol("css3", random_input(rng), c);
        CHECK(d.success_probability() == doctest::Approx(2 * beta * beta).epsilon(1e-10));
        for (const auto& b : d.branches) {
            CHECK(b.bits.at("bob_to_charlie") == 1);  // nothing beyond the base protocol
            if (b.success) {
                CHECK(b.fidelity == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
    }
    CHECK(enumerate_protocol("css3", reference_input(), ChannelSpec::maximal())
              .success_probability() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("all conclusive sharing proposals agree across the beta grid") {
    for (double beta : {0.25, 0.45, 0.6}) {
        const ChannelSpec c = ChannelSpec::from_beta(beta);
        const double expected = 2 * beta * beta;
        for (const std::string id : {"css1_mh", "css1_qact1", "css2", "css3"}) {
            CHECK(success_probability(id, c) == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("no phase information reaches Charlie before Bob's message") {
    Rng rng(407);
    for (const std::string id : {"hbb", "css1_mh", "css1_qact1", "css2", "css3"}) {
        const ChannelSpec c = id == "hbb" ? ChannelSpec::maximal() : ChannelSpec::from_beta(0.6);
        for (int trial = 0; trial < 10; ++trial) {
            CHECK(secrecy_offdiagonal(id, random_input(rng), c) < 1e-10);
        }
    }
    CHECK_THROWS_AS(secrecy_offdiagonal("standard", reference_input(), ChannelSpec::maximal()),
                    UnknownProtocolError);
}

TEST_CASE("secret-sharing traces carry the claimant and knowledge flags") {
    Rng rng(408);
    const auto t = hbb_secret_share(reference_input(), rng);
    CHECK(t.claimant == "charlie");
    CHECK_FALSE(t.single_party_can_reconstruct);
    CHECK(t.success);
    CHECK(t.fidelity == doctest::Approx(1.0).epsilon(1e-12));
}
