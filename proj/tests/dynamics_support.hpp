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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mwion/dynamics.hpp"

namespace mwion::testing {

// Rabi frequency of a two-level oscillation read off the first population
// maximum of |spin, n> in a sampled time series (parabolic peak refinement).
inline double measured_rabi_frequency(const TimeSeries& series, int spin, int n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i + 1 < series.states.size(); ++i) {
        const double p = series.states[i].population(spin, n);
        if (p > series.states[i - 1].population(spin, n) && p >= series.states[i + 1].population(spin, n) &&
            p > 0.5) {
            best = i;
            break;
        }
    }
    if (best == 0) throw std::runtime_error("no population maximum in time series");
    const double y0 = series.states[best - 1].population(spin, n);
    const double y1 = series.states[best].population(spin, n);
    const double y2 = series.states[best + 1].population(spin, n);
    const double h = series.times[best + 1] - series.times[best];
    const double offset = 0.5 * h * (y0 - y2) / (y0 - 2 * y1 + y2);
    return std::numbers::pi / (series.times[best] + offset);
}

}  // namespace mwion::testing
