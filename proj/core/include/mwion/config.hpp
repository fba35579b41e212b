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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mwion/species.hpp"

namespace mwion {

inline constexpr int kConfigSchemaVersion = 1;

/// Raised for malformed or invalid configuration documents.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Trap and field parameters for one linear chain. Frequencies are angular
/// (rad/s); the field is B(z) = gradient_b * z + offset_b0 along the trap axis.
struct TrapConfig {
    IonSpecies species;
    int n_ions = 1;
    double omega_z = 0.0;     // rad/s
    double omega_r = 0.0;     // rad/s
    double gradient_b = 0.0;  // T/m
    double offset_b0 = 0.0;   // T

    double field_at(double z) const { return gradient_b * z + offset_b0; }

    /// Throws ConfigError naming the violated invariant.
    void validate() const;

    friend bool operator==(const TrapConfig&, const TrapConfig&) = default;
};

struct LinearityCheck {
    bool linear = false;
    double margin = 0.0;  // (omega_r/omega_z) / (0.73 N^0.86)
};

/// Minimum omega_r/omega_z for which the chain stays linear: 0.73 N^0.86.
double linearity_threshold(int n_ions);
LinearityCheck check_linearity(const TrapConfig& config);

enum class FrequencyUnit { kRadPerSecond, kHertz };

FrequencyUnit parse_frequency_unit(std::string_view text);

/// Reads a frequency field that is either {"value": x, "unit": "Hz"|"rad/s"}
/// or a bare number interpreted in \p bare_unit. A bare number with no
/// bare_unit is rejected.
double parse_frequency(const nlohmann::json& node, std::string_view key,
                       const FrequencyUnit* bare_unit);

/// Parses and validates a configuration document. Top-level sections other
/// than the trap keys ("drive", "fidelity", "dynamics") are left to callers.
TrapConfig load_config(const nlohmann::json& doc);
TrapConfig load_config_text(std::string_view text);
TrapConfig load_config_file(const std::filesystem::path& path);

/// Inverse of load_config: frequencies are written in rad/s with explicit
/// units, and the species is written out in full.
nlohmann::json serialize(const TrapConfig& config);

}  // namespace mwion
