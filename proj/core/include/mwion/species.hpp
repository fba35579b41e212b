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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mwion {

/// Mass and hyperfine data for one ion type. The qubit is the pair
/// (F=0, m_F=0) / (F=1, m_F=+1) of an I=1/2, J=1/2 ground state.
struct IonSpecies {
    std::string name;
    double mass = 0.0;                 // kg
    double hyperfine_splitting = 0.0;  // rad/s
    double g_j = 2.0;
    double g_i_over_g_j = 0.0;

    double g_i() const { return g_i_over_g_j * g_j; }

    /// Throws std::invalid_argument when mass or splitting is not positive.
    void validate() const;

    friend bool operator==(const IonSpecies&, const IonSpecies&) = default;
};

IonSpecies ytterbium171();

/// Built-in species, looked up by name ("171Yb+", also "Yb171+").
std::optional<IonSpecies> find_builtin_species(std::string_view name);
std::vector<std::string> builtin_species_names();

}  // namespace mwion
