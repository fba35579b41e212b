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
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mwion/addressing.hpp"
#include "mwion/config.hpp"
#include "mwion/fidelity.hpp"

namespace mwion::cli {

// A configuration document plus the optional tool sections the core loader
// passes through untouched.
struct Inputs {
    TrapConfig trap;
    bool gradient_auto = false;
    std::optional<DriveField> drive;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> sample_budget;
    std::optional<IonForceConvention> convention;
    std::optional<int> n_max;
};

Inputs load_inputs(const nlohmann::json& doc);
Inputs load_inputs_file(const std::filesystem::path& path);

}  // namespace mwion::cli
