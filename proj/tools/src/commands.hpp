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

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "inputs.hpp"
#include "mwion/dynamics.hpp"
#include "mwion/fidelity.hpp"

namespace mwion::cli {

enum class Format { kJson, kCsv };

// A failure inside one pipeline stage; the stage name goes into the diagnostic.
class StageError : public std::runtime_error {
  public:
    StageError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

  private:
    std::string stage_;
};

std::string utc_timestamp();

struct DesignOptions {
    bool fidelity = true;
    bool numeric_oracle = true;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> sample_budget;
    std::vector<IonForceConvention> conventions{IonForceConvention::kMeanOfLevels,
                                                IonForceConvention::kGroundState};
    std::optional<double> rabi_frequency;  // rad/s; default drive section or omega_z / 10
    std::size_t oracle_samples = 20000;
    std::size_t bus_mode = 0;
    unsigned threads = 0;
};

nlohmann::json design_report(const Inputs& inputs, const DesignOptions& options, const std::string& timestamp);
void write_design(std::ostream& out, const nlohmann::json& report, Format format);

void write_modes(std::ostream& out, const Inputs& inputs, Format format);
void write_spectrum(std::ostream& out, const Inputs& inputs, Format format, std::size_t bus_mode = 0);

enum class Transition { kCarrier, kBlue, kRed };

struct EvolveRequest {
    Transition transition = Transition::kCarrier;
    std::optional<std::size_t> ion;       // default: ion nearest the trap centre
    std::size_t mode = 0;
    std::optional<double> rabi_frequency;  // rad/s
    std::optional<double> detuning;        // rad/s, overrides the transition
    std::optional<double> eta;
    std::optional<double> epsilon_c;
    std::optional<double> duration;        // s
    std::size_t samples = 400;
    int initial_spin = 0;
    int initial_n = 0;
    std::optional<int> n_max;
    Integrator integrator = Integrator::kBulirschStoer;
};

struct EvolveOutput {
    nlohmann::json header;
    TimeSeries series;
};

EvolveOutput run_evolve(const Inputs& inputs, const EvolveRequest& request);
void write_evolve(std::ostream& out, const EvolveOutput& output, Format format);

}  // namespace mwion::cli
