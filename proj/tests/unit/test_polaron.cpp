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
#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "mwion/polaron.hpp"

namespace mwion {
namespace {

TEST(Operators, Algebra) {
    const auto ops = SpinBosonOperators::build(10);
    EXPECT_EQ(ops.dimension(), 22);
    const Eigen::MatrixXd comm = ops.a * ops.a_dag - ops.a_dag * ops.a;
    // [a, a^dag] = 1 except at the truncation edge.
    for (int s = 0; s < 2; ++s) {
        for (int n = 0; n < 10; ++n) EXPECT_NEAR(comm(s * 11 + n, s * 11 + n), 1.0, 1e-14);
    }
    EXPECT_EQ((ops.sigma_plus * ops.sigma_minus + ops.sigma_minus * ops.sigma_plus -
               Eigen::MatrixXd::Identity(22, 22)).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ((ops.sigma_z * ops.a - ops.a * ops.sigma_z).cwiseAbs().maxCoeff(), 0.0);
}

TEST(PolaronTransform, ZeroCoupling) {
    EXPECT_EQ(polaron_transform_check(0.0, 20).residual, 0.0);
    EXPECT_EQ(transformed_ladder_check(0.0, 20).residual, 0.0);
}

TEST(PolaronTransform, DecouplesAwayFromEdge) {
    const auto check = polaron_transform_check(0.02, 60);
    EXPECT_LT(check.residual, 1e-10);
    EXPECT_EQ(check.edge_levels, 5);
    EXPECT_LT(polaron_transform_check(0.05, 60).residual, 1e-10);
}

TEST(PolaronTransform, ResidualLocalisedAtEdge) {
    const auto check = transformed_ladder_check(0.05, 60);
    EXPECT_LT(check.residual, 1e-9);
    ASSERT_EQ(check.level_residual.size(), 61u);
    const double interior = *std::max_element(check.level_residual.begin(), check.level_residual.begin() + 50);
    EXPECT_LT(interior, 1e-12);
    EXPECT_GT(check.level_residual[60], 1e3 * interior);
    // Without a guard band the truncation artefact shows up.
    EXPECT_GT(transformed_ladder_check(0.05, 60, 0).residual, 1e-6);
}

TEST(PolaronTransform, SpectrumIsTwoShiftedLadders) {
    const double eps = 0.05, w0 = 2.5, wl = 1.0;
    const int n_max = 60;
    const auto ops = SpinBosonOperators::build(n_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(static_hamiltonian(ops, eps, w0, wl));
    std::vector<double> expected;
    for (int n = 0; n <= n_max; ++n) {
        for (double s : {-0.5, 0.5}) expected.push_back(s * w0 + n * wl - wl * eps * eps / 4);
    }
    std::sort(expected.begin(), expected.end());
    // Compare well below the truncation edge.
    for (int i = 0; i < 80; ++i) EXPECT_NEAR(es.eigenvalues()[i], expected[i], 1e-10) << i;
}

TEST(PolaronTransform, RejectsBadArguments) {
    EXPECT_THROW(polaron_transform_check(-0.1, 20), std::invalid_argument);
    EXPECT_THROW(transformed_ladder_check(0.1, 4, 5), std::invalid_argument);
}

}  // namespace
}  // namespace mwion
