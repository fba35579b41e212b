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

#include "mwion/config.hpp"
#include "mwion/constants.hpp"
#include "mwion/species.hpp"

namespace mwion::testing {

inline TrapConfig make_config(int n_ions, double omega_z_hz, double gradient = 0.0, double offset = 0.0) {
    TrapConfig c;
    c.species = ytterbium171();
    c.n_ions = n_ions;
    c.omega_z = constants::kTwoPi * omega_z_hz;
    c.omega_r = 2.0 * linearity_threshold(n_ions) * c.omega_z;
    c.gradient_b = gradient;
    c.offset_b0 = offset;
    return c;
}

inline double relative_error(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace mwion::testing
