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
#include "mwion/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mwion/constants.hpp"

namespace mwion {
namespace {

using nlohmann::json;

constexpr std::array kTrapKeys = {"schema_version", "species", "n_ions", "omega_z", "omega_r",
                                  "gradient_b", "offset_b0", "frequency_unit"};
constexpr std::array kSectionKeys = {"drive", "fidelity", "dynamics", "description"};

bool is_known_key(const std::string& key) {
    for (const char* k : kTrapKeys) {
        if (key == k) return true;
    }
    for (const char* k : kSectionKeys) {
        if (key == k) return true;
    }
    return false;
}

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) {
        throw ConfigError(std::string("missing field '") + key + "'");
    }
    return *it;
}

double require_number(const json& node, const char* key) {
    if (!node.is_number()) {
        throw ConfigError(std::string("field '") + key + "' must be a number");
    }
    return node.get<double>();
}

IonSpecies parse_species(const json& node, const FrequencyUnit* bare_unit) {
    if (node.is_string()) {
        const auto name = node.get<std::string>();
        auto found = find_builtin_species(name);
        if (!found) throw ConfigError("unknown species '" + name + "'");
        return *found;
    }
    if (!node.is_object()) {
        throw ConfigError("field 'species' must be a name or an object");
    }
    IonSpecies s;
    if (auto base = node.find("base"); base != node.end()) {
        auto found = find_builtin_species(base->get<std::string>());
        if (!found) throw ConfigError("unknown species '" + base->get<std::string>() + "'");
        s = *found;
    }
    if (auto it = node.find("name"); it != node.end()) s.name = it->get<std::string>();
    if (auto it = node.find("mass_kg"); it != node.end()) {
        s.mass = require_number(*it, "species.mass_kg");
    } else if (auto it2 = node.find("mass_u"); it2 != node.end()) {
        s.mass = require_number(*it2, "species.mass_u") * constants::kAtomicMassUnit;
    }
    if (node.contains("hyperfine_splitting")) {
        s.hyperfine_splitting = parse_frequency(node, "hyperfine_splitting", bare_unit);
    }
    if (auto it = node.find("gJ"); it != node.end()) s.g_j = require_number(*it, "species.gJ");
    if (auto it = node.find("gI_over_gJ"); it != node.end()) {
        s.g_i_over_g_j = require_number(*it, "species.gI_over_gJ");
    }
    if (s.name.empty()) s.name = "custom";
    if (s.mass == 0.0) throw ConfigError("missing field 'species.mass_kg' or 'species.mass_u'");
    if (s.hyperfine_splitting == 0.0) {
        throw ConfigError("missing field 'species.hyperfine_splitting'");
    }
    return s;
}

}  // namespace

void TrapConfig::validate() const {
    try {
        species.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (n_ions < 1) throw ConfigError("n_ions >= 1 violated");
    if (!(omega_z > 0.0) || !std::isfinite(omega_z)) throw ConfigError("omega_z > 0 violated");
    if (!(omega_r > 0.0) || !std::isfinite(omega_r)) throw ConfigError("omega_r > 0 violated");
    if (!(gradient_b >= 0.0) || !std::isfinite(gradient_b)) {
        throw ConfigError("gradient_b >= 0 violated");
    }
    if (!(offset_b0 >= 0.0) || !std::isfinite(offset_b0)) {
        throw ConfigError("offset_b0 >= 0 violated");
    }
}

double linearity_threshold(int n_ions) { return 0.73 * std::pow(static_cast<double>(n_ions), 0.86); }

LinearityCheck check_linearity(const TrapConfig& config) {
    const double ratio = config.omega_r / config.omega_z;
    const double margin = ratio / linearity_threshold(config.n_ions);
    return {margin >= 1.0, margin};
}

FrequencyUnit parse_frequency_unit(std::string_view text) {
    if (text == "Hz" || text == "hz") return FrequencyUnit::kHertz;
    if (text == "rad/s" || text == "rad_per_s") return FrequencyUnit::kRadPerSecond;
    throw ConfigError("unknown frequency unit '" + std::string(text) + "' (use \"Hz\" or \"rad/s\")");
}

double parse_frequency(const json& node, std::string_view key, const FrequencyUnit* bare_unit) {
    const std::string k(key);
    const json& value = require(node, k.c_str());
    double v = 0.0;
    FrequencyUnit unit{};
    if (value.is_object()) {
        v = require_number(require(value, "value"), (k + ".value").c_str());
        const json& u = require(value, "unit");
        if (!u.is_string()) throw ConfigError("field '" + k + ".unit' must be a string");
        unit = parse_frequency_unit(u.get<std::string>());
    } else if (value.is_number()) {
        if (bare_unit == nullptr) {
            throw ConfigError("field '" + k +
                              "' is a bare number but no 'frequency_unit' is given");
        }
        v = value.get<double>();
        unit = *bare_unit;
    } else {
        throw ConfigError("field '" + k + "' must be a number or {value, unit}");
    }
    if (!std::isfinite(v)) throw ConfigError("field '" + k + "' is not finite");
    return unit == FrequencyUnit::kHertz ? v * constants::kTwoPi : v;
}

TrapConfig load_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (!is_known_key(key)) throw ConfigError("unknown field '" + key + "'");
    }
    if (auto it = doc.find("schema_version"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<int>() != kConfigSchemaVersion) {
            throw ConfigError("unsupported schema_version (expected " +
                              std::to_string(kConfigSchemaVersion) + ")");
        }
    }
    FrequencyUnit bare{};
    const FrequencyUnit* bare_unit = nullptr;
    if (auto it = doc.find("frequency_unit"); it != doc.end()) {
        bare = parse_frequency_unit(it->get<std::string>());
        bare_unit = &bare;
    }

    TrapConfig c;
    c.species = parse_species(require(doc, "species"), bare_unit);
    const json& n = require(doc, "n_ions");
    if (!n.is_number_integer()) throw ConfigError("field 'n_ions' must be an integer");
    c.n_ions = n.get<int>();
    if (c.n_ions < 1) throw ConfigError("n_ions >= 1 violated");
    c.omega_z = parse_frequency(doc, "omega_z", bare_unit);
    if (!(c.omega_z > 0.0)) throw ConfigError("omega_z > 0 violated");
    if (doc.contains("omega_r") && !doc.at("omega_r").is_null()) {
        c.omega_r = parse_frequency(doc, "omega_r", bare_unit);
    } else {
        c.omega_r = 1.25 * linearity_threshold(c.n_ions) * c.omega_z;
    }
    c.gradient_b = require_number(require(doc, "gradient_b"), "gradient_b");
    if (auto it = doc.find("offset_b0"); it != doc.end()) {
        c.offset_b0 = require_number(*it, "offset_b0");
    }
    c.validate();
    return c;
}

TrapConfig load_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    return load_config(doc);
}

TrapConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config_text(buffer.str());
}

json serialize(const TrapConfig& c) {
    auto freq = [](double w) { return json{{"value", w}, {"unit", "rad/s"}}; };
    return json{
        {"schema_version", kConfigSchemaVersion},
        {"species",
         {{"name", c.species.name},
          {"mass_kg", c.species.mass},
          {"hyperfine_splitting", freq(c.species.hyperfine_splitting)},
          {"gJ", c.species.g_j},
          {"gI_over_gJ", c.species.g_i_over_g_j}}},
        {"n_ions", c.n_ions},
        {"omega_z", freq(c.omega_z)},
        {"omega_r", freq(c.omega_r)},
        {"gradient_b", c.gradient_b},
        {"offset_b0", c.offset_b0},
    };
}

}  // namespace mwion
