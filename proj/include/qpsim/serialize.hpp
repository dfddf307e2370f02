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

#include <string>

#include <json.hpp>

#include "qpsim/analysis.hpp"
#include "qpsim/verify.hpp"

namespace qpsim {

using Json = nlohmann::json;

// Complex numbers serialize as [re, im] pairs throughout.
Json to_json(const Complex& z);
Json to_json(const InputQubit& q);
Json to_json(const ChannelSpec& c);
Json to_json(const TraceEvent& e);
Json to_json(const ProtocolTrace& t);
Json to_json(const SecretShareTrace& t);
Json to_json(const OutcomeBranch& b);
Json to_json(const OutcomeDistribution& d);
Json to_json(const SampleStats& s);
Json to_json(const BitReport& r);
Json to_json(const CriterionResult& r);

/// RFC 4180 field quoting (only when needed).
std::string csv_escape(const std::string& field);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace qpsim
