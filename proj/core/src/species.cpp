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

#include "mwion/species.hpp"

#include <cmath>
#include <stdexcept>

#include "mwion/constants.hpp"

namespace mwion {

void IonSpecies::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::invalid_argument("species '" + name + "': mass must be > 0");
    }
    if (!(hyperfine_splitting > 0.0) || !std::isfinite(hyperfine_splitting)) {
        throw std::invalid_argument("species '" + name + "': hyperfine_splitting must be > 0");
    }
    if (!std::isfinite(g_j) || !std::isfinite(g_i_over_g_j) || g_j == g_i()) {
        throw std::invalid_argument("species '" + name + "': invalid g-factors");
    }
}

IonSpecies ytterbium171() {
    using namespace constants;
    IonSpecies s;
    s.name = "171Yb+";
    // Neutral-atom mass minus one electron.
    s.mass = 170.9363258 * kAtomicMassUnit - kElectronMass;
    s.hyperfine_splitting = kTwoPi * 12.6e9;
    s.g_j = 2.0;
    s.g_i_over_g_j = 0.0;
    return s;
}

std::optional<IonSpecies> find_builtin_species(std::string_view name) {
    if (name == "171Yb+" || name == "Yb171+" || name == "171Yb") {
        return ytterbium171();
    }
    return std::nullopt;
}

std::vector<std::string> builtin_species_names() { return {"171Yb+"}; }

}  // namespace mwion
