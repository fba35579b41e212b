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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mwion/config.hpp"

namespace mwion {

/// Raised when the equilibrium iteration fails or lands on a non-minimum.
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Equilibrium positions and axial normal modes of a linear Coulomb crystal.
struct ChainSolution {
    std::vector<double> positions;          // m, ascending
    double length_scale_z0 = 0.0;           // m
    std::vector<double> mode_frequencies;   // rad/s, ascending
    Eigen::MatrixXd mode_vectors;           // column l is mode l
    std::vector<std::string> warnings;

    std::size_t size() const { return positions.size(); }
};

struct EquilibriumOptions {
    double tolerance = 1e-12;  // max-norm of the dimensionless gradient
    int max_iterations = 200;
};

struct EquilibriumResult {
    std::vector<double> positions;  // dimensionless, u = z / z0
    double gradient_norm = 0.0;
    int iterations = 0;
};

/// z0 = (e^2 / (4 pi eps0 m omega_z^2))^(1/3).
double length_scale(const IonSpecies& species, double omega_z);

/// Gradient of the dimensionless potential
///   sum u_i^2 / 2 + sum_{i<j} 1/|u_i - u_j| - sum f_i u_i.
Eigen::VectorXd potential_gradient(std::span<const double> u, std::span<const double> forces);
/// Hessian of the same potential (independent of the forces).
Eigen::MatrixXd potential_hessian(std::span<const double> u);

/// Damped Newton iteration in dimensionless units. \p forces are
/// F_i / (m omega_z^2 z0); empty means zero. \p initial_guess, when given,
/// must be strictly increasing.
EquilibriumResult solve_equilibrium_dimensionless(std::size_t n_ions,
                                                  std::span<const double> forces = {},
                                                  std::span<const double> initial_guess = {},
                                                  const EquilibriumOptions& options = {});

/// Equilibrium positions in metres; \p forces_newton has one constant axial
/// force per ion (empty = none).
std::vector<double> solve_equilibrium(const TrapConfig& config,
                                      std::span<const double> forces_newton = {},
                                      const EquilibriumOptions& options = {});

struct NormalModes {
    std::vector<double> frequencies;  // rad/s, ascending
    Eigen::MatrixXd vectors;
    std::vector<std::string> warnings;
};

/// Diagonalises the Hessian at \p positions (metres). Eigenvector signs are
/// fixed so that the first largest-magnitude component is positive.
NormalModes normal_modes(const TrapConfig& config, std::span<const double> positions);

ChainSolution solve_chain(const TrapConfig& config, std::span<const double> forces_newton = {},
                          const EquilibriumOptions& options = {});

/// Empirical highest axial mode, omega_N / omega_z = 2.7 + 0.5 N.
double highest_mode_empirical(int n_ions);
/// True inside the range 5 <= N <= 100 where the empirical law was fitted.
bool highest_mode_empirical_in_range(int n_ions);

/// Smallest adjacent gap of an ascending position list (needs >= 2 ions).
double min_spacing(std::span<const double> positions);
/// delta z = z0 * 2 / N^0.559.
double spacing_law(int n_ions, double z0);

}  // namespace mwion
