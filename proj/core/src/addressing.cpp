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
#include "mwion/addressing.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mwion/constants.hpp"

namespace mwion {
namespace {

void check_indices(const ChainSolution& chain, std::size_t ion, std::size_t mode) {
    if (ion >= chain.size()) {
        throw std::out_of_range("ion index " + std::to_string(ion) + " out of range");
    }
    if (mode >= chain.mode_frequencies.size()) {
        throw std::out_of_range("mode index " + std::to_string(mode) + " out of range");
    }
}

double participation(const ChainSolution& chain, std::size_t ion, std::size_t mode) {
    return std::abs(chain.mode_vectors(static_cast<Eigen::Index>(ion), static_cast<Eigen::Index>(mode)));
}

}  // namespace

double DriveField::axial_wavevector() const {
    return drive_frequency / constants::kSpeedOfLight * std::cos(incidence_angle);
}

void DriveField::validate() const {
    if (!(drive_frequency > 0.0) || !std::isfinite(drive_frequency)) {
        throw std::invalid_argument("drive frequency must be > 0");
    }
    if (!(rabi_frequency >= 0.0) || !std::isfinite(rabi_frequency)) {
        throw std::invalid_argument("Rabi frequency must be >= 0");
    }
    if (!(incidence_angle >= 0.0 && incidence_angle <= 0.5 * std::numbers::pi)) {
        throw std::invalid_argument("incidence angle must lie in [0, pi/2]");
    }
}

double ground_state_extent(const IonSpecies& species, double omega) {
    return std::sqrt(constants::kHbar / (2.0 * species.mass * omega));
}

double epsilon_c(const TrapConfig& config, const ChainSolution& chain, const QubitLevels& levels,
                 std::size_t ion, std::size_t mode) {
    check_indices(chain, ion, mode);
    const double omega_l = chain.mode_frequencies[mode];
    const double field = config.field_at(chain.positions[ion]);
    const double dkappa =
        std::abs(levels.kappa(field, QubitLevel::kUpper) - levels.kappa(field, QubitLevel::kLower));
    const double dz = ground_state_extent(config.species, omega_l);
    return participation(chain, ion, mode) * dz * dkappa * constants::kMuB * config.gradient_b /
           (constants::kHbar * omega_l);
}

double lamb_dicke(const TrapConfig& config, const ChainSolution& chain, const DriveField& drive,
                  std::size_t ion, std::size_t mode) {
    check_indices(chain, ion, mode);
    drive.validate();
    const double k = std::abs(drive.axial_wavevector());
    return participation(chain, ion, mode) * k *
           ground_state_extent(config.species, chain.mode_frequencies[mode]);
}

double effective_lamb_dicke(double eta, double eps_c) {
    if (eta < 0.0 || eps_c < 0.0) throw std::invalid_argument("Lamb-Dicke parameters must be >= 0");
    return std::hypot(eta, eps_c);
}

double required_gradient(const TrapConfig& config, const QubitLevels& levels) {
    using namespace constants;
    if (config.n_ions < 2) throw std::invalid_argument("required_gradient: need at least 2 ions");
    const double n = config.n_ions;
    const double b0 = config.offset_b0;
    const double dkappa =
        std::abs(levels.kappa(b0, QubitLevel::kUpper) - levels.kappa(b0, QubitLevel::kLower));
    const double inv_z0_scale = std::cbrt(4.0 * std::numbers::pi * kEpsilon0 * config.species.mass /
                                          (kElementaryCharge * kElementaryCharge));
    return kHbar / (2.0 * kMuB) / dkappa * inv_z0_scale * std::pow(config.omega_z, 5.0 / 3.0) *
           (4.7 * std::pow(n, 0.56) + 0.5 * std::pow(n, 1.56));
}

std::vector<IonSpectrum> spectrum(const TrapConfig& config, const ChainSolution& chain,
                                  const QubitLevels& levels) {
    std::vector<IonSpectrum> out;
    out.reserve(chain.size());
    for (double z : chain.positions) {
        IonSpectrum s;
        s.position = z;
        s.carrier = resonance_frequency(levels, config, z);
        for (double w : chain.mode_frequencies) {
            s.red.push_back(s.carrier - w);
            s.blue.push_back(s.carrier + w);
        }
        out.push_back(std::move(s));
    }
    return out;
}

double min_spectral_gap(const std::vector<IonSpectrum>& spec, std::size_t bus_mode) {
    if (spec.size() < 2) throw std::invalid_argument("min_spectral_gap: need at least 2 ions");
    const std::size_t top = spec.front().blue.size() - 1;
    if (bus_mode > top) throw std::out_of_range("bus mode index out of range");

    std::vector<std::size_t> order(spec.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return spec[a].carrier < spec[b].carrier; });

    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const IonSpectrum& lo = spec[order[i]];
        const IonSpectrum& hi = spec[order[i + 1]];
        gap = std::min(gap, hi.red[bus_mode] - lo.blue[top]);
        gap = std::min(gap, hi.red[top] - lo.blue[bus_mode]);
    }
    return gap;
}

CouplingReport build_coupling_report(const TrapConfig& config, const ChainSolution& chain,
                                     const QubitLevels& levels, const std::optional<DriveField>& drive,
                                     std::size_t bus_mode) {
    if (bus_mode >= chain.mode_frequencies.size()) throw std::out_of_range("bus mode index out of range");
    CouplingReport report;
    report.bus_mode = bus_mode;
    report.bus_frequency = chain.mode_frequencies[bus_mode];
    for (std::size_t i = 0; i < chain.size(); ++i) {
        IonCoupling ion;
        ion.position = chain.positions[i];
        ion.field = config.field_at(ion.position);
        ion.resonance = resonance_frequency(levels, config, ion.position);
        ion.epsilon_c = epsilon_c(config, chain, levels, i, bus_mode);
        ion.eta = drive ? lamb_dicke(config, chain, *drive, i, bus_mode) : 0.0;
        ion.eta_effective = effective_lamb_dicke(ion.eta, ion.epsilon_c);
        report.ions.push_back(ion);
    }
    if (config.n_ions >= 2) {
        report.required_gradient = required_gradient(config, levels);
        report.min_spectral_gap = min_spectral_gap(spectrum(config, chain, levels), bus_mode);
    }
    return report;
}

}  // namespace mwion
