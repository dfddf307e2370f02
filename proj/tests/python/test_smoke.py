# Copyright 2026 The qpsim developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import qpsim


def test_states_roundtrip_numpy():
    s = qpsim.make_state(np.array([1.0, 0.0, 0.0, 1.0], dtype=complex), ["A", "B"])
    amps = s.amps
    assert amps.shape == (4,)
    assert abs(np.linalg.norm(amps) - 1.0) < 1e-12
    assert s.labels == ["A", "B"]
    assert abs(amps[0] - 1 / math.sqrt(2)) < 1e-12


def test_fidelity_hand_value():
    phi = qpsim.single_qubit(1 / math.sqrt(2), 1 / math.sqrt(2), "q")
    distorted = qpsim.single_qubit(0.8 / math.sqrt(2), 0.6 / math.sqrt(2), "q")
    assert abs(qpsim.fidelity_pure(phi, distorted) - 0.98) < 1e-12


def test_discrimination_povm_completeness():
    c = qpsim.ChannelSpec.from_beta(0.6)
    povm = qpsim.discrimination_povm(c)
    total = sum(e.mat for e in povm.elements)
    assert np.max(np.abs(total - np.eye(2))) < 1e-12
    u_plus = np.array([c.alpha, c.beta])
    conclusive = u_plus @ (povm.elements[0].mat + povm.elements[1].mat) @ u_plus
    assert abs(conclusive.real - 0.72) < 1e-12


def test_protocol_run_and_enumeration():
    c = qpsim.ChannelSpec.from_beta(0.6)
    q = qpsim.reference_input()

    trace = qpsim.mh_teleport(q, c, qpsim.Rng(7))
    assert trace.bits["alice_to_bob"] == 3
    if trace.success:
        assert abs(trace.fidelity - 1.0) < 1e-10

    dist = qpsim.enumerate_protocol("css2", q, c)
    assert abs(dist.success_probability() - 0.72) < 1e-10
    assert abs(sum(b.probability for b in dist.branches) - 1.0) < 1e-10


def test_hbb_always_succeeds():
    trace = qpsim.hbb_secret_share(qpsim.reference_input(), qpsim.Rng(1))
    assert trace.success
    assert trace.claimant == "charlie"
    assert not trace.single_party_can_reconstruct
    assert abs(trace.fidelity - 1.0) < 1e-10


def test_monte_carlo_deterministic():
    c = qpsim.ChannelSpec.from_beta(0.6)
    q = qpsim.reference_input()
    s1 = qpsim.monte_carlo("qact2", q, c, 2000, 42)
    s2 = qpsim.monte_carlo("qact2", q, c, 2000, 42)
    assert s1.successes == s2.successes
    assert s1.branch_frequencies == s2.branch_frequencies
    p = 0.72
    bound = 4 * math.sqrt(p * (1 - p) / 2000)
    assert abs(s1.successes / 2000 - p) <= bound


def test_errors_map_to_python():
    with pytest.raises(qpsim.ZeroNormError):
        qpsim.make_state(np.zeros(2, dtype=complex), ["q"])
    with pytest.raises(qpsim.UnknownProtocolError):
        qpsim.enumerate_protocol("nope", qpsim.reference_input(), qpsim.ChannelSpec.maximal())
    with pytest.raises(qpsim.BadSpecError):
        qpsim.ChannelSpec.from_beta(0.9)
    assert issubclass(qpsim.BadSpecError, qpsim.Error)


def test_reduced_density_and_secrecy():
    c = qpsim.ChannelSpec(0.8, 0.6)
    rho = qpsim.reduced_density(qpsim.channel_state(c), ["B"])
    assert abs(rho.mat[0, 0].real - 0.64) < 1e-12
    assert abs(rho.mat[1, 1].real - 0.36) < 1e-12
    assert rho.is_valid()
    assert qpsim.secrecy_offdiagonal("css3", qpsim.reference_input(), c) < 1e-10
