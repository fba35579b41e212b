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

#include "mwion/config.hpp"
#include "mwion/species.hpp"

namespace mwion {

/// Qubit levels: kLower is (F=0, m_F=0), kUpper is (F=1, m_F=+1).
enum class QubitLevel { kLower, kUpper };

/// Breit-Rabi energies of the qubit pair of an I=1/2, J=1/2 ground state.
///
/// The field B is the signed component along the trap axis, which is also the
/// quantisation axis: the stretched state is linear in B and the F=0 state is
/// even in B, so both branches continue analytically through B=0.
class QubitLevels {
  public:
    explicit QubitLevels(IonSpecies species);

    const IonSpecies& species() const { return species_; }
    /// E_HFS = hbar * hyperfine_splitting (J).
    double hyperfine_energy() const { return hyperfine_energy_; }

    /// x(B) = (gJ - gI) mu_B B / E_HFS.
    double field_parameter(double field) const;
    /// Level energy in joules.
    double energy(double field, QubitLevel level) const;
    /// kappa = (dE/dB) / mu_B.
    double kappa(double field, QubitLevel level) const;
    /// (E_upper - E_lower)/hbar - hyperfine_splitting, evaluated without
    /// cancellation against the large zero-field splitting.
    double transition_shift(double field) const;
    /// (E_upper - E_lower)/hbar in rad/s.
    double transition_frequency(double field) const;

  private:
    IonSpecies species_;
    double hyperfine_energy_;
};

double breit_rabi_energy(const QubitLevels& levels, double field, QubitLevel which);
double kappa(const QubitLevels& levels, double field, QubitLevel which);

/// omega(z) = (E_1(B(z)) - E_0(B(z))) / hbar.
double resonance_frequency(const QubitLevels& levels, const TrapConfig& config, double z);
/// omega(z) - hyperfine_splitting.
double resonance_shift(const QubitLevels& levels, const TrapConfig& config, double z);

}  // namespace mwion
