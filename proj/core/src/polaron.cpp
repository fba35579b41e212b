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
#include "mwion/polaron.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace mwion {
namespace {

void check_arguments(double eps_c, int n_max, int edge_levels) {
    if (!(eps_c >= 0.0) || !std::isfinite(eps_c)) throw std::invalid_argument("eps_c must be >= 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (edge_levels < 0 || edge_levels > n_max) throw std::invalid_argument("bad truncation edge width");
}

void accumulate(const Eigen::MatrixXd& diff, int n_max, TransformCheck& check) {
    const Eigen::Index m = n_max + 1;
    const int keep = n_max - check.edge_levels;
    for (Eigen::Index row = 0; row < diff.rows(); ++row) {
        const auto n = static_cast<int>(row % m);
        const double row_max = diff.row(row).cwiseAbs().maxCoeff();
        check.level_residual[static_cast<std::size_t>(n)] =
            std::max(check.level_residual[static_cast<std::size_t>(n)], row_max);
        if (n > keep) continue;
        for (Eigen::Index col = 0; col < diff.cols(); ++col) {
            if (static_cast<int>(col % m) > keep) continue;
            check.residual = std::max(check.residual, std::abs(diff(row, col)));
        }
    }
}

Eigen::MatrixXd generator(const SpinBosonOperators& ops, double eps_c) {
    return 0.5 * eps_c * (ops.a_dag - ops.a) * ops.sigma_z;
}

}  // namespace

SpinBosonOperators SpinBosonOperators::build(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const Eigen::Index m = n_max + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index n = 1; n < m; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    const Eigen::MatrixXd id_f = Eigen::MatrixXd::Identity(m, m);

    Eigen::Matrix2d sz, sp;
    sz << -1.0, 0.0, 0.0, 1.0;
    sp << 0.0, 0.0, 1.0, 0.0;  // |1><0|
    auto kron = [m](const Eigen::Matrix2d& spin, const Eigen::MatrixXd& fock) {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * m, 2 * m);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) out.block(i * m, j * m, m, m) = spin(i, j) * fock;
        }
        return out;
    };

    SpinBosonOperators ops;
    ops.n_max = n_max;
    ops.a = kron(Eigen::Matrix2d::Identity(), a);
    ops.a_dag = ops.a.transpose();
    ops.sigma_z = kron(sz, id_f);
    ops.sigma_plus = kron(sp, id_f);
    ops.sigma_minus = ops.sigma_plus.transpose();
    return ops;
}

Eigen::MatrixXd static_hamiltonian(const SpinBosonOperators& ops, double eps_c, double omega_0,
                                   double omega_l) {
    return 0.5 * omega_0 * ops.sigma_z + omega_l * ops.a_dag * ops.a +
           0.5 * omega_l * eps_c * (ops.a_dag + ops.a) * ops.sigma_z;
}

TransformCheck polaron_transform_check(double eps_c, int n_max, const PolaronCheckOptions& options) {
    check_arguments(eps_c, n_max, options.edge_levels);
    const auto ops = SpinBosonOperators::build(n_max);
    const Eigen::MatrixXd s = generator(ops, eps_c);
    const Eigen::MatrixXd u = s.exp();
    const Eigen::MatrixXd u_inv = (-s).exp();
    const Eigen::MatrixXd h = static_hamiltonian(ops, eps_c, options.omega_0, options.omega_l);
    const auto dim = ops.dimension();
    const Eigen::MatrixXd target = 0.5 * options.omega_0 * ops.sigma_z + options.omega_l * ops.a_dag * ops.a -
                                   0.25 * options.omega_l * eps_c * eps_c * Eigen::MatrixXd::Identity(dim, dim);

    TransformCheck check;
    check.edge_levels = options.edge_levels;
    check.level_residual.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    accumulate((u * h * u_inv - target) / options.omega_l, n_max, check);
    return check;
}

TransformCheck transformed_ladder_check(double eps_c, int n_max, int edge_levels) {
    check_arguments(eps_c, n_max, edge_levels);
    const auto ops = SpinBosonOperators::build(n_max);
    const Eigen::MatrixXd s = generator(ops, eps_c);
    const Eigen::MatrixXd u = s.exp();
    const Eigen::MatrixXd u_inv = (-s).exp();
    const Eigen::MatrixXd x = ops.a_dag - ops.a;
    const Eigen::MatrixXd shift_up = (eps_c * x).eval().exp();
    const Eigen::MatrixXd shift_down = (-eps_c * x).eval().exp();

    TransformCheck check;
    check.edge_levels = edge_levels;
    check.level_residual.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    accumulate(u * ops.a * u_inv - (ops.a - 0.5 * eps_c * ops.sigma_z), n_max, check);
    accumulate(u * ops.a_dag * u_inv - (ops.a_dag - 0.5 * eps_c * ops.sigma_z), n_max, check);
    accumulate(u * ops.sigma_plus * u_inv - ops.sigma_plus * shift_up, n_max, check);
    accumulate(u * ops.sigma_minus * u_inv - ops.sigma_minus * shift_down, n_max, check);
    return check;
}

}  // namespace mwion
