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
#include <vector>

namespace qpsim {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured vs expected, human readable
};

/// Runs the full verification suite: every reproduced value at its pinned
/// tolerance. The last entry reports the suite's own wall time against the
/// 60 second budget.
std::vector<CriterionResult> run_verification();

}  // namespace qpsim
