// Copyright 2026 The mwion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace mwion::cli {

struct TableRow {
    std::string quantity;  // gradient_T_per_m | epsilon_c | gate_error
    int n_ions = 0;
    double trap_frequency_hz = 0.0;
    std::string convention;  // empty for convention-independent quantities
    double published = 0.0;
    double computed = 0.0;

    double relative_deviation() const { return (computed - published) / published; }
};

struct TableOptions {
    std::uint64_t seed = SpreadOptions{}.seed;
    std::size_t sample_budget = SpreadOptions{}.sample_budget;
    std::vector<IonForceConvention> conventions{IonForceConvention::kMeanOfLevels,
                                                IonForceConvention::kGroundState};
    bool gate_error = true;
    unsigned threads = 0;
};

struct TableCell {
    int n_ions;
    double trap_frequency_hz;
    double gradient;
    double epsilon_c;
    double gate_error;
};

// Published design values for a 171Yb+ chain with Omega_R = omega_z / 10.
const std::vector<TableCell>& published_table();

std::vector<TableRow> compute_table(const TableOptions& options);
void write_table(std::ostream& out, const std::vector<TableRow>& rows, Format format, std::uint64_t seed);

}  // namespace mwion::cli
