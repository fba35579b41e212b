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
#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "mwion/displacement.hpp"
#include "mwion/dynamics.hpp"

namespace mwion {
namespace {

using cd = std::complex<double>;

// Taylor series of exp(beta a^dag - beta* a) in a truncated space; independent of
// both the Laguerre closed form and the library's matrix exponential.
Eigen::MatrixXcd displacement_by_series(cd beta, int levels) {
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(levels, levels);
    for (int n = 0; n + 1 < levels; ++n) {
        const double s = std::sqrt(static_cast<double>(n + 1));
        gen(n + 1, n) = beta * s;
        gen(n, n + 1) = -std::conj(beta) * s;
    }
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(levels, levels);
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k < 80; ++k) {
        term = term * gen / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

TEST(Laguerre, LowOrders) {
    for (double x : {0.0, 0.3, 2.5}) {
        EXPECT_DOUBLE_EQ(laguerre(0, 0.0, x), 1.0);
        EXPECT_NEAR(laguerre(1, 0.0, x), 1.0 - x, 1e-15);
        EXPECT_NEAR(laguerre(2, 1.0, x), (x * x - 6 * x + 6) / 2, 1e-14);
        EXPECT_NEAR(laguerre(3, 0.0, x), (-x * x * x + 9 * x * x - 18 * x + 6) / 6, 1e-14);
    }
    EXPECT_NEAR(laguerre(5, 0.0, 0.0), 1.0, 1e-15);
    EXPECT_NEAR(laguerre(4, 2.0, 0.0), 15.0, 1e-13);  // binom(n+alpha, n)
    EXPECT_THROW(laguerre(-1, 0.0, 1.0), std::invalid_argument);
}

TEST(DisplacementElement, Trivial) {
    EXPECT_EQ(displacement_matrix_element(0, 0, cd{}), cd(1.0));
    EXPECT_EQ(displacement_matrix_element(3, 1, cd{}), cd(0.0));
    const cd beta(0.03, -0.02);
    const cd expected = beta * std::exp(-std::norm(beta) / 2);
    EXPECT_NEAR(std::abs(displacement_matrix_element(1, 0, beta) - expected), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(displacement_matrix_element(0, 1, beta) + std::conj(expected)), 0.0, 1e-16);
}

TEST(DisplacementElement, MatchesSeriesOracle) {
    const int levels = 40;
    for (cd beta : {cd(0.1, 0.0), cd(0.0, 0.1), cd(0.06, -0.08), cd(0.3, 0.4)}) {
        const auto oracle = displacement_by_series(beta, levels);
        for (int n = 0; n <= 12; ++n) {
            for (int m = 0; m <= 12; ++m) {
                EXPECT_NEAR(std::abs(displacement_matrix_element(n, m, beta) - oracle(n, m)), 0.0, 1e-10)
                    << n << "," << m << " beta=" << beta;
            }
        }
    }
}

TEST(DisplacementElement, Unitarity) {
    const cd beta(0.2, 0.15);
    const int levels = 10;
    // Columns of the infinite matrix are unit vectors; truncate the sum far out.
    for (int m = 0; m < levels; ++m) {
        double sum = 0.0;
        for (int n = 0; n < 60; ++n) sum += std::norm(displacement_matrix_element(n, m, beta));
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(DisplacementElement, LibraryOperatorAgrees) {
    const cd beta(0.05, 0.0075);
    const auto d = displacement_operator(beta, 15);
    for (int n = 0; n <= 15; ++n) {
        for (int m = 0; m <= 15; ++m) EXPECT_NEAR(std::abs(d(n, m) - displacement_matrix_element(n, m, beta)), 0.0, 1e-12);
    }
}

TEST(DisplacementElement, OverflowGuard) {
    EXPECT_THROW(displacement_matrix_element(200, 0, cd(10.0, 0.0)), std::overflow_error);
    EXPECT_THROW(displacement_matrix_element(-1, 0, cd(0.1, 0.0)), std::invalid_argument);
    EXPECT_NO_THROW(displacement_matrix_element(100, 100, cd(1.0, 0.0)));
}

TEST(DisplacementAmplitude, Components) {
    const cd beta = displacement_amplitude(7e-7, 0.0075);
    EXPECT_EQ(beta.real(), 0.0075);
    EXPECT_EQ(beta.imag(), 7e-7);
    EXPECT_DOUBLE_EQ(std::abs(displacement_amplitude(3e-3, 4e-3)), 5e-3);
}

TEST(AnalyticRabi, Carrier) {
    EXPECT_DOUBLE_EQ(rabi_frequency_analytic(0, 0, 0.1, 2.0), 2.0 * std::exp(-0.005));
    const double eta = 0.05;
    EXPECT_NEAR(rabi_frequency_analytic(5, 5, eta, 1.0), std::exp(-eta * eta / 2) * laguerre(5, 0.0, eta * eta), 1e-15);
}

TEST(AnalyticRabi, Sideband) {
    const double eta = 0.0075;
    const double r = rabi_frequency_analytic(0, 1, eta, 1.0);
    EXPECT_NEAR(r / eta, 1.0, eta * eta);
    for (int n = 0; n < 6; ++n) {
        const double leading = eta * std::sqrt(n + 1.0);
        EXPECT_NEAR(rabi_frequency_analytic(n, n + 1, eta, 1.0) / leading, 1.0, 3 * (n + 1) * eta * eta);
        EXPECT_DOUBLE_EQ(rabi_frequency_analytic(n, n + 1, eta, 1.0), rabi_frequency_analytic(n + 1, n, eta, 1.0));
    }
    EXPECT_EQ(rabi_frequency_analytic(0, 1, 0.0, 1.0), 0.0);
    EXPECT_EQ(rabi_frequency_analytic(3, 2, 0.0, 1.0), 0.0);
    EXPECT_THROW(rabi_frequency_analytic(0, 1, -0.1, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace mwion
