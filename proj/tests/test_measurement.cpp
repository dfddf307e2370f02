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

#include "qpsim/measurement.hpp"
#include "qpsim/protocols.hpp"

using namespace qpsim;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double quad_form(const Operator& op, const Vector& v) {
    return (v.adjoint() * op.mat * v)(0, 0).real();
}

}  // namespace

TEST_CASE("Bell measurement on the maximal channel gives four 1/4 branches") {
    Rng rng(7);
    const InputQubit q = random_input(rng);
    auto psi = tensor(q.as_state("1"), channel_state(ChannelSpec::maximal()));
    auto branches = enumerate_projective(psi, bell_measurement(), {"1", "A"});
    REQUIRE(branches.size() == 4);
    double total = 0.0;
    for (const auto& b : branches) {
        CHECK(b.probability == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(b.post_state_valid);
        CHECK(std::abs(b.post_state.norm() - 1.0) < 1e-12);
        total += b.probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measuring a basis state in the computational basis is certain") {
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ProjectiveMeasurement m{{Operator{2, p0}, Operator{2, p1}}, {"zero", "one"}};
    Rng rng(3);
    auto r = projective_measure(single_qubit(1, 0, "q"), m, {"q"}, rng);
    CHECK(r.outcome_index == 0);
    CHECK(r.probability == doctest::Approx(1.0));
}

TEST_CASE("parity split is even for a balanced input on any channel") {
    for (double beta : {0.2, 0.45, kInvSqrt2}) {
        auto psi = tensor(single_qubit(kInvSqrt2, kInvSqrt2, "1"),
                          channel_state(ChannelSpec::from_beta(beta)));
        auto branches = enumerate_projective(psi, parity_measurement(), {"1", "A"});
        CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(branches[1].probability == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("perturbed or incomplete projector sets are rejected") {
    auto bell = bell_measurement();
    ProjectiveMeasurement fuzzed = bell;
    fuzzed.validated = false;
    fuzzed.projectors[0].mat(0, 0) += 1e-3;
    CHECK_THROWS_AS(fuzzed.validate(), InvalidMeasurementError);

    ProjectiveMeasurement incomplete{{bell.projectors[0]}, {"only"}};
    CHECK_THROWS_AS(incomplete.validate(), InvalidMeasurementError);

    ProjectiveMeasurement overlapping{{bell.projectors[0], bell.projectors[0]}, {"a", "b"}};
    CHECK_THROWS_AS(overlapping.validate(), InvalidMeasurementError);

    Rng rng(5);
    auto psi = tensor(random_input(rng).as_state("1"), channel_state(ChannelSpec::maximal()));
    ProjectiveMeasurement fuzzed2 = bell_measurement();
    fuzzed2.projectors[2].mat(1, 2) += 1e-3;
    CHECK_THROWS_AS(enumerate_projective(psi, fuzzed2, {"1", "A"}), InvalidMeasurementError);
}

TEST_CASE("branch probabilities are a distribution for every fixed measurement") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const InputQubit q = random_input(rng);
        auto psi = tensor(q.as_state("1"),
                          channel_state(ChannelSpec::from_beta(0.1 + 0.6 * rng.uniform())));
        for (const auto& m : {bell_measurement(), parity_measurement()}) {
            double total = 0.0;
            for (const auto& b : enumerate_projective(psi, m, {"1", "A"})) {
                CHECK(b.probability >= 0.0);
                total += b.probability;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("discrimination POVM: maximal channel needs no inconclusive outcome") {
    auto p = discrimination_povm(ChannelSpec::maximal());
    CHECK(p.elements[2].mat.cwiseAbs().maxCoeff() < 1e-12);
    Vector u_plus(2), u_minus(2);
    u_plus << kInvSqrt2, kInvSqrt2;
    u_minus << kInvSqrt2, -kInvSqrt2;
    CHECK(quad_form(p.elements[0], u_plus) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(quad_form(p.elements[0], u_minus) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("discrimination POVM annihilates the wrong state and succeeds with 2 beta^2") {
    const ChannelSpec c{0.8, 0.6};
    auto p = discrimination_povm(c);
    Vector u_plus(2), u_minus(2);
    u_plus << 0.8, 0.6;
    u_minus << 0.8, -0.6;
    CHECK(quad_form(p.elements[0], u_plus) == doctest::Approx(0.72).epsilon(1e-12));
    CHECK(quad_form(p.elements[0], u_minus) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(quad_form(p.elements[1], u_plus) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.conclusive_mask == std::vector<bool>{true, true, false});
}

TEST_CASE("discrimination POVM identities across the beta range") {
    for (int i = 0; i <= 20; ++i) {
        const double beta = i / 20.0 * kInvSqrt2;
        const ChannelSpec c = ChannelSpec::from_beta(beta);
        auto p = discrimination_povm(c);
        Vector u_plus(2), u_minus(2);
        u_plus << c.alpha, c.beta;
        u_minus << c.alpha, -c.beta;
        CHECK(std::abs(quad_form(p.elements[1], u_plus)) < 1e-10);
        CHECK(std::abs(quad_form(p.elements[0], u_minus)) < 1e-10);
        const double conclusive = 2.0 * beta * beta;
        CHECK(quad_form(p.elements[0], u_plus) + quad_form(p.elements[1], u_plus) ==
              doctest::Approx(conclusive).epsilon(1e-10));
        CHECK(quad_form(p.elements[0], u_minus) + quad_form(p.elements[1], u_minus) ==
              doctest::Approx(conclusive).epsilon(1e-10));
        Matrix sum = p.elements[0].mat + p.elements[1].mat + p.elements[2].mat;
        CHECK((sum - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
        for (int j = 0; j < 3; ++j) {
            CHECK((p.kraus[j].mat.adjoint() * p.kraus[j].mat - p.elements[j].mat)
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("degenerate channel cannot be discriminated") {
    auto p = discrimination_povm(ChannelSpec::from_beta(0.0));
    Matrix proj0 = Matrix::Zero(2, 2);
    proj0(0, 0) = 1.0;
    CHECK((p.elements[2].mat - proj0).cwiseAbs().maxCoeff() < 1e-14);
    Vector u(2);
    u << 1.0, 0.0;
    CHECK(quad_form(p.elements[0], u) + quad_form(p.elements[1], u) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("discrimination POVM rejects bad Schmidt pairs") {
    CHECK_THROWS_AS(discrimination_povm(ChannelSpec{0.6, 0.8}), BadSpecError);
    CHECK_THROWS_AS(discrimination_povm(ChannelSpec{0.9, 0.6}), BadSpecError);
    CHECK_THROWS_AS(ChannelSpec::from_beta(0.9), BadSpecError);
}

TEST_CASE("povm enumeration: exhaustive probabilities and valid post states") {
    const ChannelSpec c{0.8, 0.6};
    auto p = discrimination_povm(c);
    for (const Complex sign : {Complex{1, 0}, Complex{-1, 0}}) {
        auto s = single_qubit(0.8, sign * 0.6, "q");
        auto branches = enumerate_povm(s, p, {"q"});
        double total = 0.0;
        for (const auto& b : branches) {
            total += b.probability;
            if (b.probability > 0.0) {
                CHECK(b.post_state_valid);
                CHECK(std::abs(b.post_state.norm() - 1.0) < 1e-12);
            }
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(branches[0].probability + branches[1].probability ==
              doctest::Approx(0.72).epsilon(1e-12));
    }
}

TEST_CASE("conclusive outcomes herald the partner qubit exactly") {
    // a alpha |00> + b beta |11>: discriminating the first qubit projects the
    // second onto (a, b) for a plus result and (a, -b) for a minus result.
    const ChannelSpec c{0.8, 0.6};
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const InputQubit q = random_input(rng);
        Vector v = Vector::Zero(4);
        v[0] = c.alpha * q.a;
        v[3] = c.beta * q.b;
        auto s = make_state(v, {"m", "B"});
        auto branches = enumerate_povm(s, discrimination_povm(c), {"m"});
        auto partner_plus = extract_qubit(branches[0].post_state, "B");
        CHECK(fidelity_pure(partner_plus, q.as_state("B")) == doctest::Approx(1.0).epsilon(1e-12));
        auto partner_minus = extract_qubit(branches[1].post_state, "B");
        CHECK(fidelity_pure(partner_minus, single_qubit(q.a, -q.b, "B")) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("a corrupted POVM is rejected") {
    auto p = discrimination_povm(ChannelSpec{0.8, 0.6});
    PovmSet broken = p;
    broken.validated = false;
    broken.elements[0].mat(0, 0) += 1e-3;
    CHECK_THROWS_AS(broken.validate(), InvalidPovmError);

    PovmSet wrong_kraus = p;
    wrong_kraus.validated = false;
    wrong_kraus.kraus[0] = identity(2);
    CHECK_THROWS_AS(wrong_kraus.validate(), InvalidPovmError);
}

TEST_CASE("kraus_from_element produces the PSD square root") {
    auto id = kraus_from_element(identity(2));
    CHECK((id.mat - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

    Matrix proj = Matrix::Zero(2, 2);
    proj(0, 0) = 1.0;
    auto k = kraus_from_element(Operator{2, proj});
    CHECK((k.mat - proj).cwiseAbs().maxCoeff() < 1e-14);

    auto p = discrimination_povm(ChannelSpec{0.8, 0.6});
    auto k1 = kraus_from_element(p.elements[0]);
    CHECK((k1.mat.adjoint() * k1.mat - p.elements[0].mat).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(kraus_from_element(pauli_z()), NotPsdError);
    Matrix nonherm(2, 2);
    nonherm << 0, 1, 0, 0;
    CHECK_THROWS_AS(kraus_from_element(Operator{2, nonherm}), NotPsdError);
}

TEST_CASE("sampled POVM frequencies match the exact distribution") {
    const ChannelSpec c{0.8, 0.6};
    auto p = discrimination_povm(c);
    auto s = single_qubit(0.8, 0.6, "q");
    auto exact = enumerate_povm(s, p, {"q"});

    const int shots = 100000;
    std::vector<int> counts(3, 0);
    Rng rng(0xABCD);
    for (int i = 0; i < shots; ++i) {
        ++counts[povm_measure(s, p, {"q"}, rng).outcome_index];
    }
    for (int j = 0; j < 3; ++j) {
        const double prob = exact[j].probability;
        const double freq = static_cast<double>(counts[j]) / shots;
        const double bound = 4.0 * std::sqrt(prob * (1.0 - prob) / shots);
        CHECK(std::abs(freq - prob) <= bound);
    }

    // Determinism: one seed, one outcome sequence.
    Rng r1(99), r2(99);
    for (int i = 0; i < 100; ++i) {
        CHECK(povm_measure(s, p, {"q"}, r1).outcome_index ==
              povm_measure(s, p, {"q"}, r2).outcome_index);
    }
}
