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
#include <random>

#include <gtest/gtest.h>

#include "mwion/config.hpp"
#include "mwion/constants.hpp"
#include "test_support.hpp"

namespace mwion {
namespace {

using nlohmann::json;

TEST(Constants, AllPositive) {
    for (double v : {kCodata2018.hbar, kCodata2018.mu_b, kCodata2018.e_charge, kCodata2018.epsilon_0,
                     kCodata2018.atomic_mass_unit, kCodata2018.speed_of_light}) {
        EXPECT_GT(v, 0.0);
    }
}

TEST(Species, YtterbiumBuiltIn) {
    const auto yb = find_builtin_species("171Yb+");
    ASSERT_TRUE(yb.has_value());
    EXPECT_DOUBLE_EQ(yb->hyperfine_splitting, constants::kTwoPi * 12.6e9);
    EXPECT_EQ(yb->g_j, 2.0);
    EXPECT_EQ(yb->g_i_over_g_j, 0.0);
    EXPECT_NEAR(yb->mass / constants::kAtomicMassUnit, 170.936, 1e-3);
    EXPECT_FALSE(find_builtin_species("40Ca+").has_value());
}

TEST(LoadConfig, TableOneDocument) {
    const auto c = load_config_text(R"({
        "schema_version": 1,
        "species": "171Yb+",
        "n_ions": 10,
        "omega_z": {"value": 100e3, "unit": "Hz"},
        "gradient_b": 9.89
    })");
    EXPECT_EQ(c.n_ions, 10);
    EXPECT_DOUBLE_EQ(c.omega_z, constants::kTwoPi * 1e5);
    EXPECT_DOUBLE_EQ(c.gradient_b, 9.89);
    EXPECT_EQ(c.offset_b0, 0.0);
    EXPECT_TRUE(check_linearity(c).linear);
}

TEST(LoadConfig, BareNumbersNeedUnitKey) {
    const json doc = {{"species", "171Yb+"}, {"n_ions", 2}, {"omega_z", 628318.5307179586}, {"gradient_b", 0.0}};
    EXPECT_THROW(load_config(doc), ConfigError);
    json with_unit = doc;
    with_unit["frequency_unit"] = "rad/s";
    const auto c = load_config(with_unit);
    EXPECT_DOUBLE_EQ(c.omega_z, 628318.5307179586);
    EXPECT_EQ(c.gradient_b, 0.0);
}

TEST(LoadConfig, Errors) {
    const json good = {{"species", "171Yb+"}, {"n_ions", 3}, {"frequency_unit", "Hz"},
                       {"omega_z", 1e5}, {"gradient_b", 1.0}};
    auto expect_error = [](const json& doc, const std::string& fragment) {
        try {
            load_config(doc);
            FAIL() << "expected ConfigError containing '" << fragment << "'";
        } catch (const ConfigError& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    };
    json zero = good;
    zero["n_ions"] = 0;
    expect_error(zero, "n_ions >= 1 violated");
    json missing = good;
    missing.erase("gradient_b");
    expect_error(missing, "missing field 'gradient_b'");
    json negative = good;
    negative["omega_z"] = -1.0;
    expect_error(negative, "omega_z > 0");
    json unknown = good;
    unknown["species"] = "unobtainium";
    expect_error(unknown, "unknown species");
    json typo = good;
    typo["gradiant_b"] = 1.0;
    expect_error(typo, "unknown field");
    json version = good;
    version["schema_version"] = 7;
    expect_error(version, "schema_version");
    EXPECT_THROW(load_config_text("{not json"), ConfigError);
}

TEST(LoadConfig, CustomSpecies) {
    const json doc = {{"species",
                       {{"name", "heavy"}, {"mass_u", 200.0},
                        {"hyperfine_splitting", {{"value", 10e9}, {"unit", "Hz"}}}, {"gJ", 2.0}}},
                      {"n_ions", 4},
                      {"omega_z", {{"value", 1e6}, {"unit", "rad/s"}}},
                      {"omega_r", {{"value", 1e7}, {"unit", "rad/s"}}},
                      {"gradient_b", 5.0},
                      {"offset_b0", 1e-4}};
    const auto c = load_config(doc);
    EXPECT_EQ(c.species.name, "heavy");
    EXPECT_DOUBLE_EQ(c.species.mass, 200.0 * constants::kAtomicMassUnit);
    EXPECT_DOUBLE_EQ(c.species.hyperfine_splitting, constants::kTwoPi * 10e9);
    EXPECT_DOUBLE_EQ(c.omega_r, 1e7);
    EXPECT_DOUBLE_EQ(c.offset_b0, 1e-4);
}

TEST(LoadConfig, DefaultRadialFrequencyIsLinear) {
    for (int n : {1, 2, 10, 40, 100}) {
        const json doc = {{"species", "171Yb+"}, {"n_ions", n}, {"frequency_unit", "Hz"},
                          {"omega_z", 1e5}, {"gradient_b", 0.0}};
        EXPECT_TRUE(check_linearity(load_config(doc)).linear) << n;
    }
}

TEST(Linearity, Examples) {
    auto c = testing::make_config(1, 1e5);
    c.omega_r = 0.73 * c.omega_z;
    EXPECT_TRUE(check_linearity(c).linear);

    c = testing::make_config(10, 1e5);
    c.omega_r = 5.29 * c.omega_z;
    const auto ok = check_linearity(c);
    EXPECT_TRUE(ok.linear);
    EXPECT_NEAR(ok.margin, 5.29 / (0.73 * std::pow(10.0, 0.86)), 1e-12);
    EXPECT_NEAR(ok.margin, 1.0003, 1e-4);

    c.omega_r = 5.0 * c.omega_z;
    EXPECT_FALSE(check_linearity(c).linear);
}

TEST(Linearity, MonotoneInRadialFrequency) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> n_dist(1, 200);
    std::uniform_real_distribution<double> ratio(0.1, 50.0);
    for (int trial = 0; trial < 500; ++trial) {
        auto c = testing::make_config(n_dist(rng), 1e5);
        double r1 = ratio(rng), r2 = ratio(rng);
        if (r1 > r2) std::swap(r1, r2);
        c.omega_r = r1 * c.omega_z;
        const bool lower = check_linearity(c).linear;
        c.omega_r = r2 * c.omega_z;
        const bool upper = check_linearity(c).linear;
        EXPECT_FALSE(lower && !upper);
    }
}

TEST(Serialize, RoundTripIsIdentity) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        TrapConfig c;
        c.species = ytterbium171();
        if (trial % 3 == 0) {
            c.species.name = "custom" + std::to_string(trial);
            c.species.mass = (1.0 + 300.0 * u(rng)) * constants::kAtomicMassUnit;
            c.species.hyperfine_splitting = 1e9 + 1e11 * u(rng);
            c.species.g_i_over_g_j = -1e-3 * u(rng);
        }
        c.n_ions = 1 + static_cast<int>(100 * u(rng));
        c.omega_z = 1e4 + 1e7 * u(rng);
        c.omega_r = c.omega_z * (1.0 + 100 * u(rng));
        c.gradient_b = trial % 5 == 0 ? 0.0 : 1e4 * u(rng);
        c.offset_b0 = trial % 2 == 0 ? 0.0 : 0.1 * u(rng);
        const auto text = serialize(c).dump();
        EXPECT_EQ(load_config_text(text), c) << text;
    }
}

}  // namespace
}  // namespace mwion
