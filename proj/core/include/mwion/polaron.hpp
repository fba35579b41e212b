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

#include <vector>

#include <Eigen/Dense>

namespace mwion {

/// Real matrices of a, a^dagger, sigma_z, sigma_+ and sigma_- on the
/// truncated spin (x) Fock space, basis index s*(n_max+1)+n with s=0 the
/// lower level (sigma_z = -1).
struct SpinBosonOperators {
    int n_max = 0;
    Eigen::MatrixXd a;
    Eigen::MatrixXd a_dag;
    Eigen::MatrixXd sigma_z;
    Eigen::MatrixXd sigma_plus;
    Eigen::MatrixXd sigma_minus;

    static SpinBosonOperators build(int n_max);
    Eigen::Index dimension() const { return a.rows(); }
};

/// H / hbar = omega_0/2 sigma_z + omega_l a^dagger a + omega_l eps_c/2 (a^dagger + a) sigma_z.
Eigen::MatrixXd static_hamiltonian(const SpinBosonOperators& ops, double eps_c, double omega_0,
                                   double omega_l);

/// Residual of a truncated-space operator identity. \p residual ignores the
/// top \p edge_levels Fock levels; \p level_residual[n] is the largest
/// deviation in the rows of Fock level n over the whole space.
struct TransformCheck {
    double residual = 0.0;
    std::vector<double> level_residual;
    int edge_levels = 0;
};

struct PolaronCheckOptions {
    int edge_levels = 5;
    double omega_0 = 2.5;  // units of omega_l
    double omega_l = 1.0;
};

/// Applies exp(S) H exp(-S), S = eps_c/2 (a^dagger - a) sigma_z, and
/// compares with omega_0/2 sigma_z + omega_l a^dagger a - omega_l eps_c^2 / 4.
/// The result is in units of omega_l.
TransformCheck polaron_transform_check(double eps_c, int n_max, const PolaronCheckOptions& options = {});

/// Checks exp(S) O exp(-S) against a - eps_c/2 sigma_z, a^dagger - eps_c/2 sigma_z,
/// sigma_+ exp(eps_c (a^dagger - a)) and sigma_- exp(-eps_c (a^dagger - a)).
TransformCheck transformed_ladder_check(double eps_c, int n_max, int edge_levels = 5);

}  // namespace mwion
