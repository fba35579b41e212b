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
#include "mwion/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "mwion/displacement.hpp"

namespace mwion {
namespace {

using cd = std::complex<double>;
using StateVector = std::vector<cd>;

class TransformedHamiltonian {
  public:
    TransformedHamiltonian(const DriveSpec& drive, double mode_frequency, int n_max,
                           const EvolveOptions& options)
        : half_rabi_(0.5 * drive.rabi_frequency), detuning_(drive.detuning),
          phase_(options.phase == PhaseConvention::kInHamiltonian ? 2.0 * drive.eta * drive.epsilon_c
                                                                  : 0.0),
          mode_frequency_(mode_frequency), levels_(n_max + 1),
          d0_(displacement_operator(displacement_amplitude(drive.eta, drive.epsilon_c), n_max,
                                    options.displacement_padding)),
          d0_adj_(d0_.adjoint()), rot_(levels_), tmp_(levels_), out_(levels_) {}

    void operator()(const StateVector& psi, StateVector& dpsi, double t) {
        const Eigen::Index m = levels_;
        Eigen::Map<const Eigen::VectorXcd> lower(psi.data(), m);
        Eigen::Map<const Eigen::VectorXcd> upper(psi.data() + m, m);
        Eigen::Map<Eigen::VectorXcd> dlower(dpsi.data(), m);
        Eigen::Map<Eigen::VectorXcd> dupper(dpsi.data() + m, m);

        for (Eigen::Index n = 0; n < m; ++n) rot_[n] = std::polar(1.0, mode_frequency_ * t * n);
        const cd drive_phase = std::polar(half_rabi_, -(detuning_ * t + phase_));
        const cd minus_i(0.0, -1.0);

        // D(t) = P D0 P^dagger with P = diag(e^{i omega_l t n}).
        tmp_ = rot_.conjugate().cwiseProduct(lower);
        out_.noalias() = d0_ * tmp_;
        dupper = (minus_i * drive_phase) * rot_.cwiseProduct(out_);

        tmp_ = rot_.conjugate().cwiseProduct(upper);
        out_.noalias() = d0_adj_ * tmp_;
        dlower = (minus_i * std::conj(drive_phase)) * rot_.cwiseProduct(out_);
    }

  private:
    double half_rabi_;
    double detuning_;
    double phase_;
    double mode_frequency_;
    Eigen::Index levels_;
    Eigen::MatrixXcd d0_;
    Eigen::MatrixXcd d0_adj_;
    Eigen::VectorXcd rot_;
    Eigen::VectorXcd tmp_;
    Eigen::VectorXcd out_;
};

void check_state(const QuantumState& state) {
    if (state.n_max < 0) throw std::invalid_argument("QuantumState: n_max must be >= 0");
    if (state.amplitudes.size() != 2 * state.levels()) {
        throw std::invalid_argument("QuantumState: amplitude count does not match n_max");
    }
}

void check_truncation(const QuantumState& state, const EvolveOptions& options, double t,
                      std::vector<std::string>& warnings) {
    const double top = state.top_levels_population();
    if (top > options.fail_top_population) {
        throw TruncationError("Fock truncation exceeded: top-level population " + std::to_string(top) +
                              " at t = " + std::to_string(t) + " s");
    }
    if (top > options.warn_top_population && warnings.empty()) {
        warnings.push_back("truncation: top-level population " + std::to_string(top) + " at t = " +
                           std::to_string(t) + " s; increase n_max");
    }
}

}  // namespace

QuantumState QuantumState::basis(int spin, int n, int n_max) {
    if (spin != 0 && spin != 1) throw std::invalid_argument("spin label must be 0 or 1");
    if (n < 0 || n > n_max) throw std::out_of_range("Fock index outside truncation");
    QuantumState s;
    s.n_max = n_max;
    s.amplitudes.assign(2 * s.levels(), cd{0.0, 0.0});
    s.at(spin, n) = 1.0;
    return s;
}

std::size_t QuantumState::index(int spin, int n) const {
    if ((spin != 0 && spin != 1) || n < 0 || n > n_max) throw std::out_of_range("basis index out of range");
    return static_cast<std::size_t>(spin) * levels() + static_cast<std::size_t>(n);
}

double QuantumState::spin_population(int spin) const {
    double p = 0.0;
    for (int n = 0; n <= n_max; ++n) p += population(spin, n);
    return p;
}

double QuantumState::norm() const {
    double p = 0.0;
    for (const cd& a : amplitudes) p += std::norm(a);
    return p;
}

double QuantumState::top_levels_population() const {
    double p = 0.0;
    for (int n = std::max(0, n_max - 1); n <= n_max; ++n) p += population(0, n) + population(1, n);
    return p;
}

void DriveSpec::validate() const {
    for (double v : {rabi_frequency, detuning, eta, epsilon_c, duration}) {
        if (!std::isfinite(v)) throw std::invalid_argument("drive parameters must be finite");
    }
    if (duration < 0.0) throw std::invalid_argument("drive duration must be >= 0");
}

Eigen::MatrixXcd displacement_operator(std::complex<double> beta, int n_max, int padding) {
    if (n_max < 0 || padding < 0) throw std::invalid_argument("displacement_operator: bad dimensions");
    const Eigen::Index dim = n_max + 1 + padding;
    Eigen::MatrixXcd generator = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index n = 1; n < dim; ++n) {
        const double s = std::sqrt(static_cast<double>(n));
        generator(n, n - 1) = beta * s;             // beta a^dagger
        generator(n - 1, n) = -std::conj(beta) * s;  // -beta^* a
    }
    const Eigen::MatrixXcd full = generator.exp();
    return full.topLeftCorner(n_max + 1, n_max + 1);
}

TimeSeries evolve_series(const QuantumState& state, const DriveSpec& drive, double mode_frequency,
                         std::size_t samples, const EvolveOptions& options) {
    namespace odeint = boost::numeric::odeint;
    check_state(state);
    drive.validate();
    if (samples == 0) throw std::invalid_argument("evolve_series: need at least one sample");

    TransformedHamiltonian hamiltonian(drive, mode_frequency, state.n_max, options);
    auto run = [&](auto&& stepper) {
        TimeSeries series;
        StateVector psi = state.amplitudes;
        series.times.push_back(0.0);
        series.states.push_back(state);

        // Initial step: a small fraction of the fastest time scale.
        const double fastest = std::max({std::abs(mode_frequency), std::abs(drive.detuning),
                                         std::abs(drive.rabi_frequency), 1e-300});
        const double dt = 0.05 / fastest;
        for (std::size_t i = 1; i <= samples; ++i) {
            const double t0 = drive.duration * static_cast<double>(i - 1) / static_cast<double>(samples);
            const double t1 = drive.duration * static_cast<double>(i) / static_cast<double>(samples);
            if (t1 > t0) {
                series.steps += odeint::integrate_adaptive(stepper, std::ref(hamiltonian), psi, t0, t1,
                                                           std::min(dt, t1 - t0));
            }
            QuantumState snapshot{state.n_max, psi};
            check_truncation(snapshot, options, t1, series.warnings);
            series.times.push_back(t1);
            series.states.push_back(std::move(snapshot));
        }
        return series;
    };
    if (options.integrator == Integrator::kBulirschStoer) {
        return run(odeint::bulirsch_stoer<StateVector>(options.absolute_tolerance,
                                                       options.relative_tolerance));
    }
    return run(odeint::make_controlled(options.absolute_tolerance, options.relative_tolerance,
                                       odeint::runge_kutta_fehlberg78<StateVector>()));
}

EvolveResult evolve(const QuantumState& state, const DriveSpec& drive, double mode_frequency,
                    const EvolveOptions& options) {
    auto series = evolve_series(state, drive, mode_frequency, 1, options);
    EvolveResult result;
    result.state = std::move(series.states.back());
    result.norm_drift = std::abs(result.state.norm() - state.norm());
    result.steps = series.steps;
    result.warnings = std::move(series.warnings);
    return result;
}

std::optional<double> measure_rabi_frequency(const TimeSeries& series, int spin, int n) {
    const auto& st = series.states;
    for (std::size_t i = 1; i + 1 < st.size(); ++i) {
        const double y0 = st[i - 1].population(spin, n);
        const double y1 = st[i].population(spin, n);
        const double y2 = st[i + 1].population(spin, n);
        if (!(y1 > 0.5 && y1 > y0 && y1 >= y2)) continue;
        const double h = series.times[i + 1] - series.times[i];
        const double curvature = y0 - 2 * y1 + y2;
        const double offset = curvature < 0.0 ? 0.5 * h * (y0 - y2) / curvature : 0.0;
        return std::numbers::pi / (series.times[i] + offset);
    }
    return std::nullopt;
}

}  // namespace mwion
