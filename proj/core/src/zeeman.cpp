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
#include "mwion/zeeman.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "mwion/constants.hpp"

namespace mwion {
namespace {

void require_finite(double field) {
    if (!std::isfinite(field)) throw std::invalid_argument("magnetic field must be finite");
}

}  // namespace

QubitLevels::QubitLevels(IonSpecies species)
    : species_(std::move(species)),
      hyperfine_energy_(constants::kHbar * species_.hyperfine_splitting) {
    species_.validate();
}

double QubitLevels::field_parameter(double field) const {
    require_finite(field);
    return (species_.g_j - species_.g_i()) * constants::kMuB * field / hyperfine_energy_;
}

double QubitLevels::energy(double field, QubitLevel level) const {
    const double e = hyperfine_energy_;
    if (level == QubitLevel::kUpper) {
        require_finite(field);
        return 0.25 * e + 0.5 * (species_.g_j + species_.g_i()) * constants::kMuB * field;
    }
    const double x = field_parameter(field);
    return -0.25 * e - 0.5 * e * std::sqrt(1.0 + x * x);
}

double QubitLevels::kappa(double field, QubitLevel level) const {
    if (level == QubitLevel::kUpper) {
        require_finite(field);
        return 0.5 * (species_.g_j + species_.g_i());
    }
    const double x = field_parameter(field);
    return -0.5 * (species_.g_j - species_.g_i()) * x / std::sqrt(1.0 + x * x);
}

double QubitLevels::transition_shift(double field) const {
    const double x = field_parameter(field);
    // sqrt(1+x^2) - 1 written to avoid cancellation at small x.
    const double quadratic = 0.5 * hyperfine_energy_ * x * x / (1.0 + std::sqrt(1.0 + x * x));
    const double linear = 0.5 * (species_.g_j + species_.g_i()) * constants::kMuB * field;
    return (linear + quadratic) / constants::kHbar;
}

double QubitLevels::transition_frequency(double field) const {
    return species_.hyperfine_splitting + transition_shift(field);
}

double breit_rabi_energy(const QubitLevels& levels, double field, QubitLevel which) {
    return levels.energy(field, which);
}

double kappa(const QubitLevels& levels, double field, QubitLevel which) {
    return levels.kappa(field, which);
}

double resonance_frequency(const QubitLevels& levels, const TrapConfig& config, double z) {
    return levels.transition_frequency(config.field_at(z));
}

double resonance_shift(const QubitLevels& levels, const TrapConfig& config, double z) {
    return levels.transition_shift(config.field_at(z));
}

}  // namespace mwion
