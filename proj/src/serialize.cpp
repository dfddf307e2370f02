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

#include "qpsim/serialize.hpp"

#include <charconv>
#include <cmath>

namespace qpsim {

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const InputQubit& q) {
    return Json{{"a", to_json(q.a)}, {"b", to_json(q.b)}};
}

Json to_json(const ChannelSpec& c) {
    return Json{{"alpha", c.alpha}, {"beta", c.beta}};
}

Json to_json(const TraceEvent& e) {
    return Json{{"party", e.party}, {"action", e.action}, {"outcome", e.outcome}};
}

Json to_json(const ProtocolTrace& t) {
    Json events = Json::array();
    for (const auto& e : t.events) {
        events.push_back(to_json(e));
    }
    Json j{{"protocol", t.protocol_id}, {"events", std::move(events)},
           {"bits", t.bits},           {"success", t.success},
           {"fidelity", t.fidelity}};
    j["final_state"] = t.final_state ? to_json(*t.final_state) : Json(nullptr);
    return j;
}

Json to_json(const SecretShareTrace& t) {
    Json j = to_json(static_cast<const ProtocolTrace&>(t));
    j["claimant"] = t.claimant;
    j["single_party_can_reconstruct"] = t.single_party_can_reconstruct;
    return j;
}

Json to_json(const OutcomeBranch& b) {
    return Json{{"path", b.path},
                {"probability", b.probability},
                {"success", b.success},
                {"fidelity", b.fidelity},
                {"bits", b.bits}};
}

Json to_json(const OutcomeDistribution& d) {
    Json branches = Json::array();
    for (const auto& b : d.branches) {
        branches.push_back(to_json(b));
    }
    return Json{{"protocol", d.protocol_id},
                {"branches", std::move(branches)},
                {"p_success", d.success_probability()},
                {"expected_bits", d.expected_bits_total()}};
}

Json to_json(const SampleStats& s) {
    return Json{{"shots", s.shots},
                {"successes", s.successes},
                {"success_frequency", static_cast<double>(s.successes) / s.shots},
                {"mean_fidelity", s.mean_fidelity},
                {"branch_frequencies", s.branch_frequencies},
                {"seed", s.seed}};
}

Json to_json(const BitReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.per_branch) {
        rows.push_back(Json{{"path", row.path},
                            {"probability", row.probability},
                            {"success", row.success},
                            {"bits", row.bits},
                            {"total", row.total}});
    }
    return Json{{"per_branch", std::move(rows)},
                {"expected", r.expected},
                {"expected_given_success", r.expected_given_success},
                {"expected_total", r.expected_total},
                {"expected_total_given_success", r.expected_total_given_success}};
}

Json to_json(const CriterionResult& r) {
    return Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace qpsim
