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

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwion/addressing.hpp"
#include "mwion/crystal.hpp"
#include "mwion/dynamics.hpp"
#include "mwion/fidelity.hpp"

namespace mwion {

/// Bumped on any breaking change of the JSON or CSV layouts below.
inline constexpr int kReportSchemaVersion = 1;

/// Shortest round-trip decimal representation.
std::string format_number(double value);

// Frequencies carry both "<name>_rad_per_s" and "<name>_hz" (value / 2 pi).
nlohmann::json to_json(const ChainSolution& chain, double omega_z);
nlohmann::json to_json(const CouplingReport& report);
nlohmann::json to_json(const SpreadEstimate& spread);
nlohmann::json to_json(const GateErrorEstimate& error);

/// One row per ion.
void write_csv(std::ostream& out, const CouplingReport& report);
/// One row per mode: index, frequency, ratio to omega_z, eigenvector components.
void write_modes_csv(std::ostream& out, const ChainSolution& chain, double omega_z);
/// One row per (ion, line): carrier and red/blue sidebands of every mode.
void write_spectrum_csv(std::ostream& out, const std::vector<IonSpectrum>& spectrum);
nlohmann::json spectrum_to_json(const std::vector<IonSpectrum>& spectrum);
/// "# <header json>" line followed by time and population columns P_s_n.
void write_time_series_csv(std::ostream& out, const TimeSeries& series, const nlohmann::json& header);

}  // namespace mwion
