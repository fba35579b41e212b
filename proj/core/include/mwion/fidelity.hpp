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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mwion/config.hpp"
#include "mwion/crystal.hpp"
#include "mwion/zeeman.hpp"

namespace mwion {

/// Force applied to the addressed ion k while the other ions carry their
/// sampled internal states.
enum class IonForceConvention {
    kMeanOfLevels,  // -(kappa_0 + kappa_1)/2 * mu_B * b
    kGroundState,   // ion k held in the lower level
};

std::string to_string(IonForceConvention convention);
IonForceConvention parse_ion_force_convention(const std::string& text);

/// Solver failure for one internal-state configuration.
class ConfigurationSolveError : public SolverError {
  public:
    ConfigurationSolveError(const std::string& what, std::vector<std::uint8_t> states, std::size_t ion);
    const std::vector<std::uint8_t>& states() const { return states_; }
    std::size_t ion() const { return ion_; }

  private:
    std::vector<std::uint8_t> states_;
    std::size_t ion_;
};

/// Qubit frequency of ion k as a function of the internal states of the
/// other ions. Each ion feels the constant force -kappa_a(B(z_j)) mu_B b,
/// with kappa evaluated at its unperturbed equilibrium field; the chain is
/// re-solved from the unperturbed equilibrium.
class ConfigurationModel {
  public:
    ConfigurationModel(const TrapConfig& config, const QubitLevels& levels,
                       IonForceConvention convention = IonForceConvention::kMeanOfLevels);

    std::size_t size() const { return base_.size(); }
    const std::vector<double>& base_positions() const { return base_; }

    /// Absolute qubit frequency (rad/s). \p states holds one label in {0,1}
    /// per ion; the entry for ion k is ignored.
    double frequency(std::span<const std::uint8_t> states, std::size_t k) const;
    /// Same, relative to the zero-field hyperfine splitting.
    double frequency_shift(std::span<const std::uint8_t> states, std::size_t k) const;

  private:
    TrapConfig config_;
    QubitLevels levels_;
    IonForceConvention convention_;
    double z0_;
    std::vector<double> base_;          // dimensionless equilibrium
    std::vector<double> force_lower_;   // dimensionless
    std::vector<double> force_upper_;
    std::vector<double> force_self_;
};

double configuration_frequency(const TrapConfig& config, const QubitLevels& levels,
                               std::span<const std::uint8_t> states, std::size_t k,
                               IonForceConvention convention = IonForceConvention::kMeanOfLevels);

struct SpreadOptions {
    std::uint64_t seed = 20010625;
    /// Enumerate all 2^(N-1) configurations of the other ions when that
    /// count does not exceed this budget (default: exhaustive for N <= 12).
    std::size_t sample_budget = 2048;
    /// Random sampling draws max(4 N^2, min_random_samples) configurations.
    std::size_t min_random_samples = 0;
    IonForceConvention convention = IonForceConvention::kMeanOfLevels;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SpreadEstimate {
    std::vector<double> sigma_per_ion;   // rad/s
    std::vector<double> mean_frequency;  // rad/s
    double mean_sigma = 0.0;             // (1/N) sum sigma_k
    double max_deviation = 0.0;          // rad/s
    std::size_t sample_count = 0;        // configurations per ion
    bool exhaustive = false;
    std::uint64_t seed = 0;
    IonForceConvention convention = IonForceConvention::kMeanOfLevels;
};

/// Pre-generated random configurations: \p count rows of \p n_ions labels.
/// Bits are taken directly from a 64-bit Mersenne Twister, so the list is
/// identical on every platform for a given seed.
std::vector<std::vector<std::uint8_t>> sample_configurations(std::size_t n_ions, std::size_t count,
                                                             std::uint64_t seed);

SpreadEstimate estimate_spread(const TrapConfig& config, const QubitLevels& levels,
                               const SpreadOptions& options = {});

/// Average single-qubit rotation error (41/120) (sigma / Omega_R)^2.
double gate_error_closed_form(double sigma, double rabi_frequency);

/// How the oracle turns sigma into a detuning distribution. Both are a normal
/// shape cut off at +-2 sigma.
enum class DetuningDistribution {
    /// Scale chosen so the truncated distribution's standard deviation is
    /// exactly sigma (the quantity estimate_spread measures).
    kMatchedStandardDeviation,
    /// Normal with scale parameter sigma, then truncated (std ~0.88 sigma).
    kNominalScale,
};

inline constexpr std::size_t kMinOracleSamples = 10000;

/// Averages the infidelity of a detuned Rabi rotation over initial states
/// alpha|0> + e^{i phi} sqrt(1-alpha^2)|1>, pulse durations t in
/// [0, pi/Omega_R] and \p samples detunings (stratified quantiles of the
/// truncated normal). Independent of the closed form.
double gate_error_numeric_oracle(double sigma, double rabi_frequency,
                                 std::size_t samples = 20000,
                                 DetuningDistribution distribution =
                                     DetuningDistribution::kMatchedStandardDeviation);

/// State-, phase- and duration-averaged infidelity for one fixed detuning.
double detuned_rotation_infidelity(double detuning, double rabi_frequency);

struct GateErrorEstimate {
    double rabi_frequency = 0.0;
    double error_closed_form = 0.0;
    std::optional<double> error_numeric;
};

GateErrorEstimate estimate_gate_error(double sigma, double rabi_frequency,
                                      std::optional<std::size_t> oracle_samples = std::nullopt);

}  // namespace mwion
