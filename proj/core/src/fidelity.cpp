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
#include "mwion/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "mwion/constants.hpp"

namespace mwion {
namespace {

unsigned resolve_threads(unsigned requested, std::size_t work) {
    unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Runs body(k) for k in [0, n) on a fixed round-robin split; each k writes
// only its own output slot, so the result does not depend on scheduling.
template <typename Body>
void parallel_for_ions(std::size_t n, unsigned threads, Body body) {
    const unsigned nt = resolve_threads(threads, n);
    std::vector<std::exception_ptr> errors(n);
    auto worker = [&](unsigned tid) {
        for (std::size_t k = tid; k < n; k += nt) {
            try {
                body(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (nt == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker, t);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

double std_normal_cdf(double x) { return 0.5 * (1.0 + std::erf(x / std::numbers::sqrt2)); }

double std_normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

// Variance of a unit normal truncated to [-t, t].
double truncated_variance(double t) {
    return 1.0 - 2.0 * t * std_normal_pdf(t) / (2.0 * std_normal_cdf(t) - 1.0);
}

// Cutoff t (in units of the scale parameter) at which the truncated
// distribution's standard deviation is exactly t/2.
double matched_cutoff() {
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid - 2.0 * std::sqrt(truncated_variance(mid)) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::string to_string(IonForceConvention convention) {
    return convention == IonForceConvention::kMeanOfLevels ? "mean" : "ground";
}

IonForceConvention parse_ion_force_convention(const std::string& text) {
    if (text == "mean") return IonForceConvention::kMeanOfLevels;
    if (text == "ground") return IonForceConvention::kGroundState;
    throw std::invalid_argument("unknown ion force convention '" + text + "' (use mean|ground)");
}

ConfigurationSolveError::ConfigurationSolveError(const std::string& what, std::vector<std::uint8_t> states,
                                                 std::size_t ion)
    : SolverError(what), states_(std::move(states)), ion_(ion) {}

ConfigurationModel::ConfigurationModel(const TrapConfig& config, const QubitLevels& levels,
                                       IonForceConvention convention)
    : config_(config), levels_(levels), convention_(convention),
      z0_(length_scale(config.species, config.omega_z)) {
    const auto n = static_cast<std::size_t>(config.n_ions);
    base_ = solve_equilibrium_dimensionless(n).positions;
    const double scale = config.species.mass * config.omega_z * config.omega_z * z0_;
    const double unit_force = constants::kMuB * config.gradient_b / scale;
    force_lower_.resize(n);
    force_upper_.resize(n);
    force_self_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double field = config.field_at(base_[j] * z0_);
        force_lower_[j] = -levels.kappa(field, QubitLevel::kLower) * unit_force;
        force_upper_[j] = -levels.kappa(field, QubitLevel::kUpper) * unit_force;
        force_self_[j] = convention == IonForceConvention::kMeanOfLevels
                             ? 0.5 * (force_lower_[j] + force_upper_[j])
                             : force_lower_[j];
    }
}

double ConfigurationModel::frequency_shift(std::span<const std::uint8_t> states, std::size_t k) const {
    const std::size_t n = size();
    if (states.size() != n) throw std::invalid_argument("configuration must have one label per ion");
    if (k >= n) throw std::out_of_range("ion index out of range");
    std::vector<double> forces(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) {
            forces[j] = force_self_[j];
        } else if (states[j] == 0) {
            forces[j] = force_lower_[j];
        } else if (states[j] == 1) {
            forces[j] = force_upper_[j];
        } else {
            throw std::invalid_argument("internal-state labels must be 0 or 1");
        }
    }
    EquilibriumResult eq;
    try {
        eq = solve_equilibrium_dimensionless(n, forces, base_);
    } catch (const SolverError& e) {
        throw ConfigurationSolveError(e.what(), {states.begin(), states.end()}, k);
    }
    return resonance_shift(levels_, config_, eq.positions[k] * z0_);
}

double ConfigurationModel::frequency(std::span<const std::uint8_t> states, std::size_t k) const {
    return config_.species.hyperfine_splitting + frequency_shift(states, k);
}

double configuration_frequency(const TrapConfig& config, const QubitLevels& levels,
                               std::span<const std::uint8_t> states, std::size_t k,
                               IonForceConvention convention) {
    return ConfigurationModel(config, levels, convention).frequency(states, k);
}

std::vector<std::vector<std::uint8_t>> sample_configurations(std::size_t n_ions, std::size_t count,
                                                             std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<std::vector<std::uint8_t>> out(count, std::vector<std::uint8_t>(n_ions));
    for (auto& row : out) {
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < n_ions; ++j) {
            if (j % 64 == 0) bits = engine();
            row[j] = static_cast<std::uint8_t>(bits & 1u);
            bits >>= 1;
        }
    }
    return out;
}

SpreadEstimate estimate_spread(const TrapConfig& config, const QubitLevels& levels,
                               const SpreadOptions& options) {
    const auto n = static_cast<std::size_t>(config.n_ions);
    if (n < 2) throw std::invalid_argument("estimate_spread: need at least 2 ions");
    const ConfigurationModel model(config, levels, options.convention);

    SpreadEstimate est;
    est.seed = options.seed;
    est.convention = options.convention;
    est.sigma_per_ion.assign(n, 0.0);
    est.mean_frequency.assign(n, 0.0);

    const bool exhaustive = n - 1 < 63 && (std::size_t{1} << (n - 1)) <= options.sample_budget;
    est.exhaustive = exhaustive;
    std::vector<std::vector<std::uint8_t>> samples;
    if (exhaustive) {
        est.sample_count = std::size_t{1} << (n - 1);
    } else {
        est.sample_count = std::max<std::size_t>(4 * n * n, options.min_random_samples);
        samples = sample_configurations(n, est.sample_count, options.seed);
    }

    std::vector<double> max_dev(n, 0.0);
    parallel_for_ions(n, options.threads, [&](std::size_t k) {
        std::vector<double> shifts(est.sample_count);
        std::vector<std::uint8_t> states(n, 0);
        for (std::size_t s = 0; s < est.sample_count; ++s) {
            if (exhaustive) {
                // Bit b of s labels the b-th ion other than k.
                for (std::size_t j = 0, bit = 0; j < n; ++j) {
                    if (j == k) continue;
                    states[j] = static_cast<std::uint8_t>((s >> bit) & 1u);
                    ++bit;
                }
                shifts[s] = model.frequency_shift(states, k);
            } else {
                shifts[s] = model.frequency_shift(samples[s], k);
            }
        }
        double mean = 0.0;
        for (double v : shifts) mean += v;
        mean /= static_cast<double>(shifts.size());
        double ss = 0.0, dev = 0.0;
        for (double v : shifts) {
            ss += (v - mean) * (v - mean);
            dev = std::max(dev, std::abs(v - mean));
        }
        const double dof = exhaustive ? static_cast<double>(shifts.size())
                                      : static_cast<double>(shifts.size() - 1);
        est.sigma_per_ion[k] = std::sqrt(ss / dof);
        est.mean_frequency[k] = config.species.hyperfine_splitting + mean;
        max_dev[k] = dev;
    });

    for (std::size_t k = 0; k < n; ++k) {
        est.mean_sigma += est.sigma_per_ion[k];
        est.max_deviation = std::max(est.max_deviation, max_dev[k]);
    }
    est.mean_sigma /= static_cast<double>(n);
    return est;
}

double gate_error_closed_form(double sigma, double rabi_frequency) {
    if (!(rabi_frequency > 0.0)) throw std::invalid_argument("gate error: Rabi frequency must be > 0");
    if (sigma < 0.0) throw std::invalid_argument("gate error: sigma must be >= 0");
    const double r = sigma / rabi_frequency;
    return 41.0 / 120.0 * r * r;
}

double detuned_rotation_infidelity(double detuning, double rabi_frequency) {
    using boost::math::quadrature::gauss;
    using cd = std::complex<double>;
    constexpr int kPhases = 8;
    const double omega = rabi_frequency;
    const double w = std::hypot(omega, detuning);

    auto at_time = [&](double t) {
        const double c0 = std::cos(0.5 * omega * t), s0 = std::sin(0.5 * omega * t);
        const double c = std::cos(0.5 * w * t), s = std::sin(0.5 * w * t);
        // Ideal and detuned rotations about x, H = (Omega sx + delta sz)/2.
        const cd i0_00(c0, 0.0), i0_01(0.0, -s0);
        const cd u00(c, -s * detuning / w), u11(c, s * detuning / w), u01(0.0, -s * omega / w);
        auto over_alpha = [&](double alpha) {
            const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
            double acc = 0.0;
            for (int p = 0; p < kPhases; ++p) {
                const double phi = 2.0 * std::numbers::pi * p / kPhases;
                const cd a0(alpha, 0.0);
                const cd a1 = std::polar(beta, phi);
                const cd f0 = i0_00 * a0 + i0_01 * a1, f1 = i0_01 * a0 + i0_00 * a1;
                const cd r0 = u00 * a0 + u01 * a1, r1 = u01 * a0 + u11 * a1;
                const double overlap = std::norm(std::conj(f0) * r0 + std::conj(f1) * r1);
                acc += 1.0 - overlap;
            }
            return acc / kPhases;
        };
        return gauss<double, 10>::integrate(over_alpha, 0.0, 1.0);
    };
    const double duration = std::numbers::pi / omega;
    return gauss<double, 30>::integrate(at_time, 0.0, duration) / duration;
}

double gate_error_numeric_oracle(double sigma, double rabi_frequency, std::size_t samples,
                                 DetuningDistribution distribution) {
    if (!(rabi_frequency > 0.0)) throw std::invalid_argument("gate error: Rabi frequency must be > 0");
    if (sigma < 0.0) throw std::invalid_argument("gate error: sigma must be >= 0");
    if (samples < kMinOracleSamples) {
        throw std::invalid_argument("gate error oracle: need at least " +
                                    std::to_string(kMinOracleSamples) + " samples");
    }
    if (sigma == 0.0) return detuned_rotation_infidelity(0.0, rabi_frequency);

    double cutoff = 2.0;  // in units of the scale parameter
    double scale = sigma;
    if (distribution == DetuningDistribution::kMatchedStandardDeviation) {
        cutoff = matched_cutoff();
        scale = 2.0 * sigma / cutoff;
    }
    const double erf_cut = std::erf(cutoff / std::numbers::sqrt2);
    double total = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
        const double x = std::numbers::sqrt2 * boost::math::erf_inv((2.0 * p - 1.0) * erf_cut);
        total += detuned_rotation_infidelity(scale * x, rabi_frequency);
    }
    return total / static_cast<double>(samples);
}

GateErrorEstimate estimate_gate_error(double sigma, double rabi_frequency,
                                      std::optional<std::size_t> oracle_samples) {
    GateErrorEstimate g;
    g.rabi_frequency = rabi_frequency;
    g.error_closed_form = gate_error_closed_form(sigma, rabi_frequency);
    if (oracle_samples) g.error_numeric = gate_error_numeric_oracle(sigma, rabi_frequency, *oracle_samples);
    return g;
}

}  // namespace mwion
