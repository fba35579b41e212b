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
#include "mwion/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mwion/constants.hpp"

namespace mwion {
namespace {

// Near N = 200 the chain is stiff enough that one ulp of a double position
// moves the gradient by ~1e-11, so iterates and forces are kept in long double.
std::vector<long double> gradient_wide(std::span<const long double> u, std::span<const double> forces) {
    const std::size_t n = u.size();
    std::vector<long double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        long double coulomb = 0.0L;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const long double d = u[i] - u[j];
            coulomb += (d > 0.0L ? 1.0L : -1.0L) / (d * d);
        }
        g[i] = u[i] - coulomb - (forces.empty() ? 0.0L : static_cast<long double>(forces[i]));
    }
    return g;
}

double max_abs(std::span<const long double> v) {
    long double m = 0.0L;
    for (long double x : v) m = std::max(m, std::abs(x));
    return static_cast<double>(m);
}

template <class T>
bool strictly_increasing(std::span<const T> u) {
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (!(u[i] > u[i - 1])) return false;
    }
    return true;
}

std::vector<double> default_guess(std::size_t n, std::span<const double> forces) {
    std::vector<double> u(n, 0.0);
    const double spacing = n > 1 ? 2.0 / std::pow(static_cast<double>(n), 0.559) : 0.0;
    double shift = 0.0;
    for (double f : forces) shift += f;
    if (!forces.empty()) shift /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = (static_cast<double>(i) - 0.5 * static_cast<double>(n - 1)) * spacing + shift;
    }
    return u;
}

}  // namespace

double length_scale(const IonSpecies& species, double omega_z) {
    using namespace constants;
    const double e2 = kElementaryCharge * kElementaryCharge;
    return std::cbrt(e2 / (4.0 * std::numbers::pi * kEpsilon0 * species.mass * omega_z * omega_z));
}

Eigen::VectorXd potential_gradient(std::span<const double> u, std::span<const double> forces) {
    std::vector<long double> wide(u.begin(), u.end());
    const auto g = gradient_wide(wide, forces);
    Eigen::VectorXd out(static_cast<Eigen::Index>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) out[static_cast<Eigen::Index>(i)] = static_cast<double>(g[i]);
    return out;
}

Eigen::MatrixXd potential_hessian(std::span<const double> u) {
    const auto n = static_cast<Eigen::Index>(u.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double diag = 1.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = std::abs(u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)]);
            const double k = 2.0 / (d * d * d);
            h(i, j) = -k;
            diag += k;
        }
        h(i, i) = diag;
    }
    return h;
}

EquilibriumResult solve_equilibrium_dimensionless(std::size_t n_ions, std::span<const double> forces,
                                                  std::span<const double> initial_guess,
                                                  const EquilibriumOptions& options) {
    if (n_ions == 0) throw std::invalid_argument("solve_equilibrium: n_ions >= 1 violated");
    if (!forces.empty() && forces.size() != n_ions) {
        throw std::invalid_argument("solve_equilibrium: forces must have one entry per ion");
    }
    for (double f : forces) {
        if (!std::isfinite(f)) throw std::invalid_argument("solve_equilibrium: non-finite force");
    }

    std::vector<double> start;
    if (!initial_guess.empty()) {
        if (initial_guess.size() != n_ions || !strictly_increasing(initial_guess)) {
            throw std::invalid_argument("solve_equilibrium: bad initial guess");
        }
        start.assign(initial_guess.begin(), initial_guess.end());
    } else {
        start = default_guess(n_ions, forces);
    }

    EquilibriumResult result;
    std::vector<long double> u(start.begin(), start.end());
    std::vector<long double> g = gradient_wide(u, forces);
    double gnorm = max_abs(g);
    std::vector<long double> trial(n_ions);
    std::vector<double> narrow(n_ions);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n_ions));
    int it = 0;
    while (gnorm >= options.tolerance) {
        if (it >= options.max_iterations) {
            throw SolverError("equilibrium did not converge after " + std::to_string(it) +
                              " iterations (gradient " + std::to_string(gnorm) + ")");
        }
        ++it;
        for (std::size_t i = 0; i < n_ions; ++i) {
            narrow[i] = static_cast<double>(u[i]);
            rhs[static_cast<Eigen::Index>(i)] = -static_cast<double>(g[i]);
        }
        const Eigen::VectorXd step = potential_hessian(narrow).ldlt().solve(rhs);

        // Backtrack on ordering violations or a non-decreasing gradient.
        double t = 1.0;
        bool accepted = false;
        for (int halvings = 0; halvings < 60; ++halvings, t *= 0.5) {
            for (std::size_t i = 0; i < n_ions; ++i) {
                trial[i] = u[i] + static_cast<long double>(t * step[static_cast<Eigen::Index>(i)]);
            }
            if (!strictly_increasing<long double>(trial)) continue;
            auto g_trial = gradient_wide(trial, forces);
            const double trial_norm = max_abs(g_trial);
            if (trial_norm < options.tolerance || trial_norm <= (1.0 - 1e-4 * t) * gnorm) {
                u.swap(trial);
                g = std::move(g_trial);
                gnorm = trial_norm;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            throw SolverError("equilibrium line search stalled at gradient " + std::to_string(gnorm));
        }
    }
    result.positions.assign(u.begin(), u.end());
    result.gradient_norm = gnorm;
    result.iterations = it;
    return result;
}

std::vector<double> solve_equilibrium(const TrapConfig& config, std::span<const double> forces_newton,
                                      const EquilibriumOptions& options) {
    const auto n = static_cast<std::size_t>(config.n_ions);
    const double z0 = length_scale(config.species, config.omega_z);
    std::vector<double> f;
    if (!forces_newton.empty()) {
        if (forces_newton.size() != n) {
            throw std::invalid_argument("solve_equilibrium: forces must have one entry per ion");
        }
        const double scale = config.species.mass * config.omega_z * config.omega_z * z0;
        f.reserve(n);
        for (double F : forces_newton) f.push_back(F / scale);
    }
    auto eq = solve_equilibrium_dimensionless(n, f, {}, options);
    for (double& x : eq.positions) x *= z0;
    return eq.positions;
}

NormalModes normal_modes(const TrapConfig& config, std::span<const double> positions) {
    const auto n = static_cast<Eigen::Index>(positions.size());
    if (n == 0) throw std::invalid_argument("normal_modes: empty chain");
    const double z0 = length_scale(config.species, config.omega_z);
    std::vector<double> u(positions.begin(), positions.end());
    for (double& x : u) x /= z0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(potential_hessian(u));
    if (solver.info() != Eigen::Success) throw SolverError("normal_modes: eigensolver failed");
    const Eigen::VectorXd& mu = solver.eigenvalues();

    NormalModes modes;
    modes.vectors = solver.eigenvectors();
    modes.frequencies.resize(static_cast<std::size_t>(n));
    for (Eigen::Index l = 0; l < n; ++l) {
        if (!(mu[l] > 0.0)) {
            throw SolverError("normal_modes: non-positive Hessian eigenvalue " + std::to_string(mu[l]) +
                              " (not a minimum)");
        }
        modes.frequencies[static_cast<std::size_t>(l)] = config.omega_z * std::sqrt(mu[l]);
        if (l > 0 && mu[l] - mu[l - 1] < 1e-9 * mu[l]) {
            modes.warnings.push_back("near-degenerate modes " + std::to_string(l - 1) + " and " +
                                     std::to_string(l) + "; eigenvectors orthonormalised");
        }

        auto v = modes.vectors.col(l);
        Eigen::Index best = 0;
        for (Eigen::Index i = 1; i < n; ++i) {
            if (std::abs(v[i]) > std::abs(v[best]) * (1.0 + 1e-9)) best = i;
        }
        if (v[best] < 0.0) v = -v;
    }
    return modes;
}

ChainSolution solve_chain(const TrapConfig& config, std::span<const double> forces_newton,
                          const EquilibriumOptions& options) {
    ChainSolution chain;
    chain.length_scale_z0 = length_scale(config.species, config.omega_z);
    chain.positions = solve_equilibrium(config, forces_newton, options);
    auto modes = normal_modes(config, chain.positions);
    chain.mode_frequencies = std::move(modes.frequencies);
    chain.mode_vectors = std::move(modes.vectors);
    chain.warnings = std::move(modes.warnings);
    return chain;
}

double highest_mode_empirical(int n_ions) { return 2.7 + 0.5 * static_cast<double>(n_ions); }

bool highest_mode_empirical_in_range(int n_ions) { return n_ions >= 5 && n_ions <= 100; }

double min_spacing(std::span<const double> positions) {
    if (positions.size() < 2) throw std::invalid_argument("min_spacing: need at least 2 ions");
    double best = positions[1] - positions[0];
    for (std::size_t i = 2; i < positions.size(); ++i) {
        best = std::min(best, positions[i] - positions[i - 1]);
    }
    return best;
}

double spacing_law(int n_ions, double z0) {
    if (n_ions < 2) throw std::invalid_argument("spacing_law: need at least 2 ions");
    return z0 * 2.0 / std::pow(static_cast<double>(n_ions), 0.559);
}

}  // namespace mwion
