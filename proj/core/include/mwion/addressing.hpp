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

#include <cstddef>
#include <optional>
#include <vector>

#include "mwion/config.hpp"
#include "mwion/crystal.hpp"
#include "mwion/zeeman.hpp"

namespace mwion {

/// Driving field: frequency omega_M, angle theta to the trap axis, and
/// Rabi frequency Omega_R.
struct DriveField {
    double drive_frequency = 0.0;  // rad/s
    double incidence_angle = 0.0;  // rad, in [0, pi/2]
    double rabi_frequency = 0.0;   // rad/s

    /// Axial wave-vector component k_z = omega_M / c * cos(theta).
    double axial_wavevector() const;
    void validate() const;
};

struct IonCoupling {
    double position = 0.0;        // m
    double field = 0.0;           // T
    double resonance = 0.0;       // rad/s
    double epsilon_c = 0.0;
    double eta = 0.0;
    double eta_effective = 0.0;
};

struct CouplingReport {
    std::size_t bus_mode = 0;
    double bus_frequency = 0.0;                // rad/s
    std::vector<IonCoupling> ions;
    std::optional<double> required_gradient;   // T/m, absent for a single ion
    std::optional<double> min_spectral_gap;    // rad/s, absent for a single ion
};

/// Ground-state extent Delta z = sqrt(hbar / (2 m omega)).
double ground_state_extent(const IonSpecies& species, double omega);

/// Gradient-induced spin-phonon coupling of ion \p ion to mode \p mode:
/// zeta * Delta z * |kappa_1 - kappa_0| * mu_B * b / (hbar omega_l), with
/// kappa evaluated at the ion's local field and zeta its exact eigenvector
/// component.
double epsilon_c(const TrapConfig& config, const ChainSolution& chain, const QubitLevels& levels,
                 std::size_t ion, std::size_t mode);

/// Photon-recoil Lamb-Dicke parameter zeta * sqrt(hbar k_z^2 / (2 m omega_l)).
double lamb_dicke(const TrapConfig& config, const ChainSolution& chain, const DriveField& drive,
                  std::size_t ion, std::size_t mode);

/// sqrt(eta^2 + epsilon_c^2).
double effective_lamb_dicke(double eta, double eps_c);

/// Smallest gradient that separates neighbouring resonances, using the
/// empirical highest-mode law and |kappa_1 - kappa_0| evaluated at b0.
double required_gradient(const TrapConfig& config, const QubitLevels& levels);

struct IonSpectrum {
    double position = 0.0;      // m
    double carrier = 0.0;       // rad/s
    std::vector<double> red;    // carrier - omega_l, l = 0..N-1
    std::vector<double> blue;   // carrier + omega_l
};

/// Carrier plus first-order sidebands for every ion.
std::vector<IonSpectrum> spectrum(const TrapConfig& config, const ChainSolution& chain,
                                  const QubitLevels& levels);

/// Minimum over neighbouring ions (ordered by carrier) of the signed
/// separation between one ion's bus sideband and its neighbour's highest
/// sideband, taking both orderings. The design condition is gap >= omega_l.
double min_spectral_gap(const std::vector<IonSpectrum>& spectrum, std::size_t bus_mode);

/// Evaluates everything above for each ion. Without a drive, eta is zero.
CouplingReport build_coupling_report(const TrapConfig& config, const ChainSolution& chain,
                                     const QubitLevels& levels,
                                     const std::optional<DriveField>& drive = std::nullopt,
                                     std::size_t bus_mode = 0);

}  // namespace mwion
