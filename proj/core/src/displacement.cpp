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
#include "mwion/displacement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mwion {

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::complex<double> displacement_amplitude(double eta, double eps_c) { return {eps_c, eta}; }

std::complex<double> displacement_matrix_element(int n, int m, std::complex<double> beta) {
    if (n < 0 || m < 0) throw std::invalid_argument("displacement_matrix_element: negative Fock index");
    const double x = std::norm(beta);
    if (x * std::max(n, m) > kMaxDisplacementArgument) {
        throw std::overflow_error("displacement_matrix_element: |beta|^2 * max(n,m) = " +
                                  std::to_string(x * std::max(n, m)) + " exceeds " +
                                  std::to_string(kMaxDisplacementArgument));
    }
    const int lo = std::min(n, m);
    const int hi = std::max(n, m);
    // sqrt(lo!/hi!) * z^(hi-lo), accumulated factor by factor.
    const std::complex<double> z = n >= m ? beta : -std::conj(beta);
    std::complex<double> prefactor = 1.0;
    for (int k = lo + 1; k <= hi; ++k) prefactor *= z / std::sqrt(static_cast<double>(k));
    return prefactor * std::exp(-0.5 * x) * laguerre(lo, static_cast<double>(hi - lo), x);
}

double rabi_frequency_analytic(int n, int m, double eta_effective, double rabi_frequency) {
    if (eta_effective < 0.0) throw std::invalid_argument("rabi_frequency_analytic: eta_eff must be >= 0");
    return rabi_frequency * std::abs(displacement_matrix_element(n, m, {eta_effective, 0.0}));
}

}  // namespace mwion
