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

#include <numbers>

namespace mwion {

/// CODATA 2018 values in SI units.
struct PhysicalConstants {
    double hbar;              // J s
    double mu_b;              // J/T
    double e_charge;          // C
    double epsilon_0;         // F/m
    double atomic_mass_unit;  // kg
    double speed_of_light;    // m/s
    double electron_mass;     // kg
};

inline constexpr PhysicalConstants kCodata2018{
    .hbar = 1.054571817e-34,
    .mu_b = 9.2740100783e-24,
    .e_charge = 1.602176634e-19,
    .epsilon_0 = 8.8541878128e-12,
    .atomic_mass_unit = 1.66053906660e-27,
    .speed_of_light = 299792458.0,
    .electron_mass = 9.1093837015e-31,
};

namespace constants {
inline constexpr double kHbar = kCodata2018.hbar;
inline constexpr double kMuB = kCodata2018.mu_b;
inline constexpr double kElementaryCharge = kCodata2018.e_charge;
inline constexpr double kEpsilon0 = kCodata2018.epsilon_0;
inline constexpr double kAtomicMassUnit = kCodata2018.atomic_mass_unit;
inline constexpr double kSpeedOfLight = kCodata2018.speed_of_light;
inline constexpr double kElectronMass = kCodata2018.electron_mass;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace constants

}  // namespace mwion
