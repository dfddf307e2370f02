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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpsim/analysis.hpp"
#include "qpsim/verify.hpp"

namespace py = pybind11;
using namespace qpsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact simulator for teleportation and quantum secret sharing over pure "
              "entangled channels";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ZeroNormError>(m, "ZeroNormError", base);
    py::register_exception<BadShapeError>(m, "BadShapeError", base);
    py::register_exception<DuplicateLabelError>(m, "DuplicateLabelError", base);
    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", base);
    py::register_exception<UnknownLabelError>(m, "UnknownLabelError", base);
    py::register_exception<LabelMismatchError>(m, "LabelMismatchError", base);
    py::register_exception<InvalidMeasurementError>(m, "InvalidMeasurementError", base);
    py::register_exception<InvalidPovmError>(m, "InvalidPovmError", base);
    py::register_exception<NotPsdError>(m, "NotPsdError", base);
    py::register_exception<BadSpecError>(m, "BadSpecError", base);
    py::register_exception<UnknownProtocolError>(m, "UnknownProtocolError", base);

    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("uniform", &Rng::uniform)
        .def("next_u64", &Rng::next_u64)
        .def_static("for_shot", &Rng::for_shot, py::arg("seed"), py::arg("shot"));

    py::class_<Operator>(m, "Operator")
        .def_readonly("dim", &Operator::dim)
        .def_property_readonly("mat", [](const Operator& op) { return op.mat; })
        .def("is_unitary", &Operator::is_unitary, py::arg("tol") = kInvariantTol)
        .def("is_hermitian", &Operator::is_hermitian, py::arg("tol") = kInvariantTol)
        .def("is_psd", &Operator::is_psd, py::arg("tol") = kInvariantTol)
        .def("is_projector", &Operator::is_projector, py::arg("tol") = kInvariantTol);
    m.def("make_operator", &make_operator, py::arg("mat"));
    m.def("identity", &identity, py::arg("dim"));
    m.def("pauli_x", &pauli_x);
    m.def("pauli_z", &pauli_z);
    m.def("cnot", &cnot);
    m.def("pauli_correction", py::overload_cast<int, int>(&pauli_correction), py::arg("flip_bit"),
          py::arg("phase_bit"));
    m.def("pauli_correction", py::overload_cast<int>(&pauli_correction), py::arg("bell_index"));
    m.def("correction_name", &correction_name, py::arg("bell_index"));
    m.def("x_basis", &x_basis);
    m.def("projector_onto", &projector_onto, py::arg("v"));

    py::class_<StateVector>(m, "StateVector")
        .def_readonly("n_qubits", &StateVector::n_qubits)
        .def_property_readonly("amps", [](const StateVector& s) { return s.amps; })
        .def_readonly("labels", &StateVector::labels)
        .def("norm", &StateVector::norm)
        .def("__repr__", [](const StateVector& s) {
            std::string r = "StateVector(qubits=[";
            for (std::size_t i = 0; i < s.labels.size(); ++i) {
                r += (i ? "," : "") + s.labels[i];
            }
            return r + "])";
        });
    m.def("make_state", &make_state, py::arg("amps"), py::arg("labels"));
    m.def("single_qubit", &single_qubit, py::arg("a"), py::arg("b"), py::arg("label"));
    m.def("basis_state", &basis_state, py::arg("index"), py::arg("labels"));
    m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
    m.def("apply_operator", &apply_operator, py::arg("state"), py::arg("op"), py::arg("targets"));
    m.def("inner", &inner, py::arg("a"), py::arg("b"));
    m.def("fidelity_pure", &fidelity_pure, py::arg("a"), py::arg("b"));

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_readonly("n_qubits", &DensityMatrix::n_qubits)
        .def_property_readonly("mat", [](const DensityMatrix& d) { return d.mat; })
        .def_readonly("labels", &DensityMatrix::labels)
        .def("is_valid", &DensityMatrix::is_valid, py::arg("tol") = kInvariantTol)
        .def("purity", &DensityMatrix::purity);
    m.def("reduced_density", &reduced_density, py::arg("state"), py::arg("keep"));
    m.def("pure_density", &pure_density, py::arg("state"));
    m.def("expectation", &expectation, py::arg("rho"), py::arg("phi"));
    m.def("contract_subspace", &contract_subspace, py::arg("state"), py::arg("targets"),
          py::arg("basis0"), py::arg("basis1"), py::arg("new_label"));
    m.def("extract_qubit", &extract_qubit, py::arg("state"), py::arg("label"));

    py::class_<ChannelSpec>(m, "ChannelSpec")
        .def(py::init([](double alpha, double beta) {
                 ChannelSpec c{alpha, beta};
                 c.validate();
                 return c;
             }),
             py::arg("alpha"), py::arg("beta"))
        .def_readonly("alpha", &ChannelSpec::alpha)
        .def_readonly("beta", &ChannelSpec::beta)
        .def_static("from_beta", &ChannelSpec::from_beta, py::arg("beta"))
        .def_static("maximal", &ChannelSpec::maximal)
        .def("is_maximal", &ChannelSpec::is_maximal, py::arg("tol") = kConstructTol);

    py::class_<InputQubit>(m, "InputQubit")
        .def(py::init<Complex, Complex>(), py::arg("a"), py::arg("b"))
        .def_static("normalized", &InputQubit::normalized, py::arg("a"), py::arg("b"))
        .def_readonly("a", &InputQubit::a)
        .def_readonly("b", &InputQubit::b)
        .def("as_state", &InputQubit::as_state, py::arg("label"));

    py::class_<DerivedSchmidt>(m, "DerivedSchmidt")
        .def_readonly("alpha_prime", &DerivedSchmidt::alpha_prime)
        .def_readonly("beta_prime", &DerivedSchmidt::beta_prime)
        .def("as_channel", &DerivedSchmidt::as_channel);
    m.def("derived_schmidt", &derived_schmidt, py::arg("channel"));
    m.def("reference_input", &reference_input);
    m.def("random_input", &random_input, py::arg("rng"));

    py::class_<ProjectiveMeasurement>(m, "ProjectiveMeasurement")
        .def(py::init([](std::vector<Operator> projectors, std::vector<std::string> labels) {
                 ProjectiveMeasurement pm{std::move(projectors), std::move(labels)};
                 pm.validate();
                 return pm;
             }),
             py::arg("projectors"), py::arg("outcome_labels"))
        .def_readonly("projectors", &ProjectiveMeasurement::projectors)
        .def_readonly("outcome_labels", &ProjectiveMeasurement::outcome_labels)
        .def("validate", &ProjectiveMeasurement::validate);

    py::class_<PovmSet>(m, "PovmSet")
        .def_readonly("elements", &PovmSet::elements)
        .def_readonly("kraus", &PovmSet::kraus)
        .def_readonly("outcome_labels", &PovmSet::outcome_labels)
        .def_readonly("conclusive_mask", &PovmSet::conclusive_mask)
        .def("validate", &PovmSet::validate);

    py::class_<BranchResult>(m, "BranchResult")
        .def_readonly("outcome_index", &BranchResult::outcome_index)
        .def_readonly("probability", &BranchResult::probability)
        .def_readonly("post_state", &BranchResult::post_state)
        .def_readonly("post_state_valid", &BranchResult::post_state_valid);

    m.def("bell_measurement", &bell_measurement);
    m.def("parity_measurement", &parity_measurement);
    m.def("x_measurement", &x_measurement);
    m.def("projective_measure", &projective_measure, py::arg("state"), py::arg("measurement"),
          py::arg("targets"), py::arg("rng"));
    m.def("enumerate_projective", &enumerate_projective, py::arg("state"), py::arg("measurement"),
          py::arg("targets"));
    m.def("discrimination_povm", &discrimination_povm, py::arg("channel"));
    m.def("povm_measure", &povm_measure, py::arg("state"), py::arg("povm"), py::arg("targets"),
          py::arg("rng"));
    m.def("enumerate_povm", &enumerate_povm, py::arg("state"), py::arg("povm"),
          py::arg("targets"));
    m.def("kraus_from_element", &kraus_from_element, py::arg("element"));

    py::class_<TraceEvent>(m, "TraceEvent")
        .def_readonly("party", &TraceEvent::party)
        .def_readonly("action", &TraceEvent::action)
        .def_readonly("outcome", &TraceEvent::outcome);

    py::class_<ProtocolTrace>(m, "ProtocolTrace")
        .def_readonly("protocol_id", &ProtocolTrace::protocol_id)
        .def_readonly("events", &ProtocolTrace::events)
        .def_readonly("bits", &ProtocolTrace::bits)
        .def_readonly("success", &ProtocolTrace::success)
        .def_readonly("final_state", &ProtocolTrace::final_state)
        .def_readonly("fidelity", &ProtocolTrace::fidelity)
        .def_readonly("zero_probability", &ProtocolTrace::zero_probability);

    py::class_<SecretShareTrace, ProtocolTrace>(m, "SecretShareTrace")
        .def_readonly("claimant", &SecretShareTrace::claimant)
        .def_readonly("single_party_can_reconstruct",
                      &SecretShareTrace::single_party_can_reconstruct);

    m.def("channel_state", &channel_state, py::arg("channel"));
    m.def("tripartite_state", &tripartite_state, py::arg("channel"));
    m.def("qact1_basis", &qact1_basis);
    m.def("qact1_measurement", &qact1_measurement);
    m.def("apply_dealer_corrections", &apply_dealer_corrections, py::arg("state"),
          py::arg("flip"), py::arg("phase"), py::arg("b_label"), py::arg("c_label"));

    using TeleportFn = ProtocolTrace (*)(const InputQubit&, const ChannelSpec&, Rng&);
    m.def("standard_teleport", static_cast<TeleportFn>(&standard_teleport), py::arg("input"),
          py::arg("channel"), py::arg("rng"));
    m.def("mh_teleport", static_cast<TeleportFn>(&mh_teleport), py::arg("input"),
          py::arg("channel"), py::arg("rng"));
    m.def("qact1_teleport", static_cast<TeleportFn>(&qact1_teleport), py::arg("input"),
          py::arg("channel"), py::arg("rng"));
    m.def("qact2_teleport", static_cast<TeleportFn>(&qact2_teleport), py::arg("input"),
          py::arg("channel"), py::arg("rng"));

    py::enum_<AliceMethod>(m, "AliceMethod")
        .value("MH", AliceMethod::MH)
        .value("QACT1", AliceMethod::QACT1);

    m.def("hbb_secret_share",
          static_cast<SecretShareTrace (*)(const InputQubit&, Rng&)>(&hbb_secret_share),
          py::arg("input"), py::arg("rng"));
    m.def("css1",
          static_cast<SecretShareTrace (*)(const InputQubit&, const ChannelSpec&, AliceMethod,
                                           Rng&)>(&css1),
          py::arg("input"), py::arg("channel"), py::arg("method"), py::arg("rng"));
    using CssFn = SecretShareTrace (*)(const InputQubit&, const ChannelSpec&, Rng&);
    m.def("css2", static_cast<CssFn>(&css2), py::arg("input"), py::arg("channel"),
          py::arg("rng"));
    m.def("css3", static_cast<CssFn>(&css3), py::arg("input"), py::arg("channel"),
          py::arg("rng"));

    py::class_<OutcomeBranch>(m, "OutcomeBranch")
        .def_readonly("path", &OutcomeBranch::path)
        .def_readonly("probability", &OutcomeBranch::probability)
        .def_readonly("success", &OutcomeBranch::success)
        .def_readonly("fidelity", &OutcomeBranch::fidelity)
        .def_readonly("bits", &OutcomeBranch::bits);

    py::class_<OutcomeDistribution>(m, "OutcomeDistribution")
        .def_readonly("protocol_id", &OutcomeDistribution::protocol_id)
        .def_readonly("branches", &OutcomeDistribution::branches)
        .def("success_probability", &OutcomeDistribution::success_probability)
        .def("expected_bits_total", &OutcomeDistribution::expected_bits_total)
        .def("fidelity_given_success", &OutcomeDistribution::fidelity_given_success);

    py::class_<SampleStats>(m, "SampleStats")
        .def_readonly("shots", &SampleStats::shots)
        .def_readonly("successes", &SampleStats::successes)
        .def_readonly("mean_fidelity", &SampleStats::mean_fidelity)
        .def_readonly("branch_frequencies", &SampleStats::branch_frequencies)
        .def_readonly("seed", &SampleStats::seed);

    py::class_<BitReport::Row>(m, "BitReportRow")
        .def_readonly("path", &BitReport::Row::path)
        .def_readonly("probability", &BitReport::Row::probability)
        .def_readonly("success", &BitReport::Row::success)
        .def_readonly("bits", &BitReport::Row::bits)
        .def_readonly("total", &BitReport::Row::total);

    py::class_<BitReport>(m, "BitReport")
        .def_readonly("per_branch", &BitReport::per_branch)
        .def_readonly("expected", &BitReport::expected)
        .def_readonly("expected_given_success", &BitReport::expected_given_success)
        .def_readonly("expected_total", &BitReport::expected_total)
        .def_readonly("expected_total_given_success",
                      &BitReport::expected_total_given_success);

    m.def("protocol_ids", [] { return protocol_ids(); });
    m.def(
        "run_protocol",
        [](const std::string& id, const InputQubit& q, const ChannelSpec& c, Rng& rng) {
            return run_protocol(id, q, c, rng);
        },
        py::arg("protocol_id"), py::arg("input"), py::arg("channel"), py::arg("rng"));
    m.def("enumerate_protocol", &enumerate_protocol, py::arg("protocol_id"), py::arg("input"),
          py::arg("channel"));
    m.def("success_probability", &success_probability, py::arg("protocol_id"),
          py::arg("channel"));
    m.def("monte_carlo", &monte_carlo, py::arg("protocol_id"), py::arg("input"),
          py::arg("channel"), py::arg("shots"), py::arg("seed"));
    m.def("bit_report", &bit_report, py::arg("distribution"));
    m.def("no_signaling_deviation", &no_signaling_deviation, py::arg("protocol_id"),
          py::arg("input"), py::arg("channel"));
    m.def("secrecy_offdiagonal", &secrecy_offdiagonal, py::arg("protocol_id"), py::arg("input"),
          py::arg("channel"));

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("pass_", &CriterionResult::pass)
        .def_readonly("detail", &CriterionResult::detail);
    m.def("run_verification", &run_verification);
}
