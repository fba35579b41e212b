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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mwion {

/// Amplitudes over |s> (x) |n>, s in {0,1}, n in 0..n_max; index s*(n_max+1)+n.
struct QuantumState {
    int n_max = 30;
    std::vector<std::complex<double>> amplitudes;

    static QuantumState basis(int spin, int n, int n_max = 30);

    std::size_t levels() const { return static_cast<std::size_t>(n_max) + 1; }
    std::size_t index(int spin, int n) const;
    std::complex<double>& at(int spin, int n) { return amplitudes[index(spin, n)]; }
    std::complex<double> at(int spin, int n) const { return amplitudes[index(spin, n)]; }
    double population(int spin, int n) const { return std::norm(at(spin, n)); }
    double spin_population(int spin) const;
    double norm() const;
    /// Population in the two highest Fock levels.
    double top_levels_population() const;
};

/// Drive parameters of the transformed interaction-picture Hamiltonian.
struct DriveSpec {
    double rabi_frequency = 0.0;  // rad/s
    double detuning = 0.0;        // omega_M - omega_0, rad/s
    double eta = 0.0;
    double epsilon_c = 0.0;
    double duration = 0.0;        // s

    void validate() const;
};

/// Where the constant phase exp(-2 i eta eps_c) lives. Populations do not
/// depend on the choice.
enum class PhaseConvention { kInHamiltonian, kAbsorbedIntoSigmaPlus };

/// Adaptive explicit steppers. Bulirsch-Stoer keeps the norm drift lowest on
/// long sideband pulses; Runge-Kutta-Fehlberg 7(8) is cheaper per unit time.
enum class Integrator { kBulirschStoer, kRungeKuttaFehlberg78 };

struct EvolveOptions {
    Integrator integrator = Integrator::kBulirschStoer;
    double relative_tolerance = 1e-12;
    double absolute_tolerance = 1e-14;
    PhaseConvention phase = PhaseConvention::kInHamiltonian;
    /// Extra Fock levels used when exponentiating the displacement generator.
    int displacement_padding = 40;
    double warn_top_population = 1e-6;
    double fail_top_population = 1e-3;
};

class TruncationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct EvolveResult {
    QuantumState state;
    double norm_drift = 0.0;  // |norm(final) - norm(initial)|
    std::size_t steps = 0;
    std::vector<std::string> warnings;
};

struct TimeSeries {
    std::vector<double> times;
    std::vector<QuantumState> states;
    std::vector<std::string> warnings;
    std::size_t steps = 0;
};

/// exp(beta a^dagger - beta^* a) on Fock levels 0..n_max, exponentiated in a
/// space enlarged by \p padding levels and cropped.
Eigen::MatrixXcd displacement_operator(std::complex<double> beta, int n_max, int padding = 40);

/// Integrates
///   H(t) = Omega_R/2 (sigma_+ e^{-i(Delta t + 2 eta eps_c)} D(t) + h.c.),
///   D(t) = exp(i((eta + i eps_c) a e^{-i omega_l t} + (eta - i eps_c) a^dagger e^{i omega_l t}))
/// with an adaptive explicit stepper. The state is never renormalised.
EvolveResult evolve(const QuantumState& state, const DriveSpec& drive, double mode_frequency,
                    const EvolveOptions& options = {});

/// Same evolution sampled at \p samples + 1 evenly spaced times in [0, duration].
TimeSeries evolve_series(const QuantumState& state, const DriveSpec& drive, double mode_frequency,
                         std::size_t samples, const EvolveOptions& options = {});

/// Rabi frequency pi / t_peak read from the first population maximum (above
/// 1/2) of |spin, n> in a sampled series, refined by a parabola through the
/// neighbouring samples. Empty if no such maximum was sampled.
std::optional<double> measure_rabi_frequency(const TimeSeries& series, int spin, int n);

}  // namespace mwion
