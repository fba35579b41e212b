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
#include "inputs.hpp"

#include <fstream>

#include "mwion/zeeman.hpp"

namespace mwion::cli {
namespace {

using nlohmann::json;

const FrequencyUnit* bare_unit(const json& doc, FrequencyUnit& storage) {
    const auto it = doc.find("frequency_unit");
    if (it == doc.end()) return nullptr;
    if (!it->is_string()) throw ConfigError("field 'frequency_unit' must be a string");
    storage = parse_frequency_unit(it->get<std::string>());
    return &storage;
}

void require_object(const json& node, const char* name) {
    if (!node.is_object()) throw ConfigError(std::string("section '") + name + "' must be an object");
}

void reject_unknown(const json& node, const char* section, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : node.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError("unknown field '" + std::string(section) + "." + key + "'");
    }
}

Inputs load_inputs_unchecked(const json& doc) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    Inputs in;
    json core = doc;
    const auto g = doc.find("gradient_b");
    if (g != doc.end() && g->is_string()) {
        if (g->get<std::string>() != "auto") throw ConfigError("field 'gradient_b' must be a number or \"auto\"");
        in.gradient_auto = true;
        core["gradient_b"] = 0.0;
    }
    in.trap = load_config(core);
    if (in.gradient_auto) {
        if (in.trap.n_ions < 2) throw ConfigError("gradient_b \"auto\" needs n_ions >= 2");
        in.trap.gradient_b = required_gradient(in.trap, QubitLevels(in.trap.species));
    }

    FrequencyUnit storage{};
    const FrequencyUnit* unit = bare_unit(doc, storage);

    if (const auto d = doc.find("drive"); d != doc.end()) {
        require_object(*d, "drive");
        reject_unknown(*d, "drive", {"drive_frequency", "incidence_angle", "rabi_frequency"});
        DriveField drive;
        drive.drive_frequency = d->contains("drive_frequency")
                                    ? parse_frequency(*d, "drive_frequency", unit)
                                    : in.trap.species.hyperfine_splitting;
        drive.incidence_angle = d->value("incidence_angle", 0.0);
        drive.rabi_frequency = d->contains("rabi_frequency") ? parse_frequency(*d, "rabi_frequency", unit) : 0.0;
        try {
            drive.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("section 'drive': ") + e.what());
        }
        in.drive = drive;
    }

    if (const auto f = doc.find("fidelity"); f != doc.end()) {
        require_object(*f, "fidelity");
        reject_unknown(*f, "fidelity", {"seed", "sample_budget", "convention"});
        if (f->contains("seed")) {
            if (!f->at("seed").is_number_unsigned()) throw ConfigError("field 'fidelity.seed' must be an unsigned integer");
            in.seed = f->at("seed").get<std::uint64_t>();
        }
        if (f->contains("sample_budget")) {
            if (!f->at("sample_budget").is_number_unsigned()) {
                throw ConfigError("field 'fidelity.sample_budget' must be an unsigned integer");
            }
            in.sample_budget = f->at("sample_budget").get<std::size_t>();
        }
        if (f->contains("convention")) {
            try {
                in.convention = parse_ion_force_convention(f->at("convention").get<std::string>());
            } catch (const std::exception& e) {
                throw ConfigError(std::string("field 'fidelity.convention': ") + e.what());
            }
        }
    }

    if (const auto dyn = doc.find("dynamics"); dyn != doc.end()) {
        require_object(*dyn, "dynamics");
        reject_unknown(*dyn, "dynamics", {"n_max"});
        if (dyn->contains("n_max")) {
            if (!dyn->at("n_max").is_number_integer() || dyn->at("n_max").get<int>() < 1) {
                throw ConfigError("field 'dynamics.n_max' must be a positive integer");
            }
            in.n_max = dyn->at("n_max").get<int>();
        }
    }
    return in;
}

}  // namespace

Inputs load_inputs(const json& doc) {
    try {
        return load_inputs_unchecked(doc);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
}

Inputs load_inputs_file(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("cannot open configuration file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(file);
    } catch (const json::exception& e) {
        throw ConfigError("malformed configuration '" + path.string() + "': " + e.what());
    }
    return load_inputs(doc);
}

}  // namespace mwion::cli
