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
#include <numeric>

#include <gtest/gtest.h>

#include "mwion/addressing.hpp"
#include "mwion/fidelity.hpp"
#include "mwion/zeeman.hpp"
#include "test_support.hpp"

namespace mwion {
namespace {

using testing::make_config;

const QubitLevels& yb() {
    static const QubitLevels levels(ytterbium171());
    return levels;
}

double population_std(const std::vector<double>& v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / v.size());
}

double fit_exponent(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TEST(Convention, Parse) {
    EXPECT_EQ(parse_ion_force_convention("mean"), IonForceConvention::kMeanOfLevels);
    EXPECT_EQ(parse_ion_force_convention("ground"), IonForceConvention::kGroundState);
    EXPECT_EQ(to_string(IonForceConvention::kGroundState), "ground");
    EXPECT_THROW(parse_ion_force_convention("upper"), std::invalid_argument);
}

TEST(ConfigurationFrequency, NoGradientNoDependence) {
    const auto c = make_config(4, 1e5, 0.0);
    const ConfigurationModel model(c, yb());
    const std::vector<std::uint8_t> a{0, 0, 0, 0}, b{1, 0, 1, 1};
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(model.frequency(a, k), model.frequency(b, k));
}

TEST(ConfigurationFrequency, NeighbourFlipScalesQuadratically) {
    std::vector<double> gradients, shifts;
    for (double b = 1.0; b <= 10.0 + 1e-9; b *= std::sqrt(10.0) / 2.0) {
        const auto c = make_config(2, 1e5, b);
        const ConfigurationModel model(c, yb());
        const std::vector<std::uint8_t> down{0, 0}, up{0, 1};
        const double delta = model.frequency_shift(up, 0) - model.frequency_shift(down, 0);
        EXPECT_NE(delta, 0.0);
        gradients.push_back(b);
        shifts.push_back(std::abs(delta));
    }
    EXPECT_NEAR(fit_exponent(gradients, shifts), 2.0, 0.05);
}

TEST(ConfigurationFrequency, AllLowerVersusAllUpperDiffer) {
    const auto c = make_config(5, 1e5, 15.0);
    for (auto conv : {IonForceConvention::kMeanOfLevels, IonForceConvention::kGroundState}) {
        const ConfigurationModel model(c, yb(), conv);
        const std::vector<std::uint8_t> lo(5, 0), hi(5, 1);
        for (std::size_t k = 0; k < 5; ++k) EXPECT_NE(model.frequency(lo, k), model.frequency(hi, k));
        EXPECT_DOUBLE_EQ(model.frequency(lo, 1), configuration_frequency(c, yb(), lo, 1, conv));
    }
}

TEST(ConfigurationFrequency, OwnLabelIgnored) {
    const auto c = make_config(3, 1e5, 15.0);
    const ConfigurationModel model(c, yb());
    const std::vector<std::uint8_t> a{0, 1, 1}, b{1, 1, 1};
    EXPECT_EQ(model.frequency(a, 0), model.frequency(b, 0));
}

TEST(ConfigurationFrequency, Validation) {
    const ConfigurationModel model(make_config(3, 1e5, 1.0), yb());
    EXPECT_THROW(model.frequency(std::vector<std::uint8_t>{0, 1}, 0), std::invalid_argument);
    EXPECT_THROW(model.frequency(std::vector<std::uint8_t>{0, 1, 2}, 0), std::invalid_argument);
    EXPECT_THROW(model.frequency(std::vector<std::uint8_t>{0, 1, 0}, 3), std::out_of_range);
}

TEST(Spread, ZeroWithoutGradient) {
    const auto s = estimate_spread(make_config(6, 1e5, 0.0), yb());
    EXPECT_TRUE(s.exhaustive);
    EXPECT_EQ(s.sample_count, 32u);
    EXPECT_EQ(s.mean_sigma, 0.0);
    EXPECT_EQ(s.max_deviation, 0.0);
}

TEST(Spread, MeanSigmaIsAverageOfIons) {
    const auto s = estimate_spread(make_config(8, 1e5, 8.0), yb());
    ASSERT_EQ(s.sigma_per_ion.size(), 8u);
    double sum = 0.0;
    for (double v : s.sigma_per_ion) {
        EXPECT_GE(v, 0.0);
        sum += v;
    }
    EXPECT_NEAR(s.mean_sigma, sum / 8, 1e-15 * sum);
    EXPECT_GE(s.max_deviation, *std::max_element(s.sigma_per_ion.begin(), s.sigma_per_ion.end()));
    EXPECT_THROW(estimate_spread(make_config(1, 1e5, 8.0), yb()), std::invalid_argument);
}

TEST(Spread, RelabelSymmetryExhaustive) {
    for (int n : {3, 6, 10}) {
        const auto c = make_config(n, 1e5, required_gradient(make_config(n, 1e5), yb()));
        const ConfigurationModel model(c, yb());
        const std::size_t k = static_cast<std::size_t>(n / 2);
        std::vector<double> direct, flipped;
        for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
            std::vector<std::uint8_t> s(n, 0), f(n, 0);
            std::size_t bit = 0;
            for (int j = 0; j < n; ++j) {
                if (static_cast<std::size_t>(j) == k) continue;
                s[j] = (mask >> bit++) & 1u;
                f[j] = 1u - s[j];
            }
            direct.push_back(model.frequency_shift(s, k));
            flipped.push_back(model.frequency_shift(f, k));
        }
        const double a = population_std(direct);
        const double b = population_std(flipped);
        EXPECT_NEAR(a, b, 1e-9 * a) << n;
        const auto est = estimate_spread(c, yb());
        EXPECT_NEAR(est.sigma_per_ion[k], a, 1e-9 * a);
    }
}

TEST(Spread, ExhaustiveMatchesRandomSampling) {
    const auto c = make_config(5, 1e5, required_gradient(make_config(5, 1e5), yb()));
    const auto exhaustive = estimate_spread(c, yb());
    ASSERT_TRUE(exhaustive.exhaustive);

    SpreadOptions opts;
    opts.sample_budget = 8;
    opts.min_random_samples = 400;
    const auto random = estimate_spread(c, yb(), opts);
    ASSERT_FALSE(random.exhaustive);
    EXPECT_EQ(random.sample_count, 400u);
    for (std::size_t k = 0; k < 5; ++k) {
        const double se = exhaustive.sigma_per_ion[k] / std::sqrt(2.0 * (random.sample_count - 1));
        EXPECT_LT(std::abs(random.sigma_per_ion[k] - exhaustive.sigma_per_ion[k]), 3 * se) << k;
    }
}

TEST(Spread, RandomSampleCountFollowsChainSize) {
    SpreadOptions opts;
    opts.sample_budget = 4;
    const auto s = estimate_spread(make_config(5, 1e5, 5.0), yb(), opts);
    EXPECT_EQ(s.sample_count, 100u);
    EXPECT_EQ(s.seed, opts.seed);
}

TEST(Spread, DeterministicForSeed) {
    const auto c = make_config(14, 1e5, 20.0);
    SpreadOptions opts;
    opts.seed = 99;
    const auto a = estimate_spread(c, yb(), opts);
    opts.threads = 3;
    const auto b = estimate_spread(c, yb(), opts);
    EXPECT_FALSE(a.exhaustive);
    EXPECT_EQ(a.sigma_per_ion, b.sigma_per_ion);
    EXPECT_EQ(a.mean_frequency, b.mean_frequency);
    EXPECT_EQ(a.mean_sigma, b.mean_sigma);
    opts.seed = 100;
    EXPECT_NE(estimate_spread(c, yb(), opts).mean_sigma, a.mean_sigma);
}

TEST(Spread, SamplerIsStable) {
    const auto a = sample_configurations(7, 50, 1);
    const auto b = sample_configurations(7, 50, 1);
    EXPECT_EQ(a, b);
    ASSERT_EQ(a.size(), 50u);
    std::size_t ones = 0;
    for (const auto& s : a) {
        ASSERT_EQ(s.size(), 7u);
        for (auto v : s) {
            EXPECT_LE(v, 1u);
            ones += v;
        }
    }
    EXPECT_GT(ones, 100u);
    EXPECT_LT(ones, 250u);
}

TEST(GateError, ClosedForm) {
    EXPECT_EQ(gate_error_closed_form(0.0, 1.0), 0.0);
    EXPECT_NEAR(gate_error_closed_form(1e-2, 1.0), 3.417e-5, 1e-8);
    for (double s : {1e-4, 3e-3, 0.02}) {
        EXPECT_DOUBLE_EQ(gate_error_closed_form(2 * s, 1.0), 4 * gate_error_closed_form(s, 1.0));
    }
    EXPECT_THROW(gate_error_closed_form(1.0, 0.0), std::invalid_argument);
}

TEST(GateError, DetunedRotationAverage) {
    EXPECT_NEAR(detuned_rotation_infidelity(0.0, 1.0), 0.0, 1e-15);
    // Small detuning: average infidelity per unit (delta/Omega)^2 is 41/120.
    const double d = 1e-3;
    EXPECT_NEAR(detuned_rotation_infidelity(d, 1.0) / (d * d), 41.0 / 120.0, 1e-3);
    EXPECT_NEAR(detuned_rotation_infidelity(-d, 1.0) / detuned_rotation_infidelity(d, 1.0), 1.0, 1e-9);
}

TEST(GateError, NumericOracle) {
    EXPECT_NEAR(gate_error_numeric_oracle(0.0, 1.0), 0.0, 1e-15);
    const double numeric = gate_error_numeric_oracle(0.01, 1.0);
    const double closed = gate_error_closed_form(0.01, 1.0);
    EXPECT_LT(std::abs(numeric / closed - 1.0), 0.2);

    std::vector<double> sigmas{0.005, 0.01, 0.02}, errors;
    for (double s : sigmas) errors.push_back(gate_error_numeric_oracle(s, 1.0));
    EXPECT_NEAR(fit_exponent(sigmas, errors), 2.0, 0.05);

    EXPECT_THROW(gate_error_numeric_oracle(0.01, 1.0, kMinOracleSamples - 1), std::invalid_argument);
    const double nominal = gate_error_numeric_oracle(0.01, 1.0, 20000, DetuningDistribution::kNominalScale);
    EXPECT_LT(nominal, numeric);
}

TEST(GateError, EstimateBundle) {
    const auto e = estimate_gate_error(1e-3, 0.1, 20000);
    EXPECT_DOUBLE_EQ(e.error_closed_form, gate_error_closed_form(1e-3, 0.1));
    ASSERT_TRUE(e.error_numeric.has_value());
    EXPECT_GE(*e.error_numeric, 0.0);
    EXPECT_LE(*e.error_numeric, 1.0);
    EXPECT_FALSE(estimate_gate_error(1e-3, 0.1).error_numeric.has_value());
}

}  // namespace
}  // namespace mwion
