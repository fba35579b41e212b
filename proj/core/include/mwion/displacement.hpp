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

#include <complex>

namespace mwion {

/// Upper bound on |beta|^2 * max(n, m) accepted by displacement_matrix_element.
inline constexpr double kMaxDisplacementArgument = 1.0e4;

/// Generalised Laguerre polynomial L_n^(alpha)(x) by three-term recurrence.
double laguerre(int n, double alpha, double x);

/// Displacement amplitude beta = i (eta - i eps_c) = eps_c + i eta of the
/// operator exp(i((eta + i eps_c) a + (eta - i eps_c) a^dagger)).
std::complex<double> displacement_amplitude(double eta, double eps_c);

/// <n| exp(beta a^dagger - beta^* a) |m>, including exp(-|beta|^2 / 2).
/// Throws std::overflow_error beyond kMaxDisplacementArgument.
std::complex<double> displacement_matrix_element(int n, int m, std::complex<double> beta);

/// Omega_R |<n| D(eta_eff) |m>|: carrier for n == m, sidebands otherwise.
double rabi_frequency_analytic(int n, int m, double eta_effective, double rabi_frequency);

}  // namespace mwion
