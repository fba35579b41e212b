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
#include "app.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mwion/config.hpp"
#include "mwion/constants.hpp"
#include "mwion/version.hpp"
#include "table1.hpp"

namespace mwion::cli {
namespace {

struct Common {
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_option("--output,-o", c.output, "Write to this file instead of stdout");
}

Format to_format(const std::string& s) { return s == "csv" ? Format::kCsv : Format::kJson; }

std::vector<IonForceConvention> to_conventions(const std::string& s) {
    if (s == "both") return {IonForceConvention::kMeanOfLevels, IonForceConvention::kGroundState};
    return {parse_ion_force_convention(s)};
}

double to_rad_per_s(double value, const std::string& unit) {
    return parse_frequency_unit(unit) == FrequencyUnit::kHertz ? value * constants::kTwoPi : value;
}

void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (c.output.empty()) {
        write(out);
        out.flush();
        return;
    }
    std::ofstream file(c.output);
    if (!file) throw StageError("output", "cannot open '" + c.output + "' for writing");
    write(file);
    if (!file) throw StageError("output", "failed writing '" + c.output + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Design and simulation tool for microwave-addressed trapped-ion chains in a magnetic field gradient",
                 "mwion"};
    app.set_version_flag("--version", std::string("mwion ") + kVersion);
    app.require_subcommand(1);

    // design
    Common design_io;
    std::string design_config;
    DesignOptions design;
    std::optional<std::uint64_t> design_seed;
    std::optional<std::size_t> design_budget;
    std::string design_conventions;
    std::optional<double> design_rabi;
    std::string design_unit = "Hz";
    bool no_fidelity = false, no_oracle = false;
    auto* cmd_design = app.add_subcommand("design", "Chain, addressing and fidelity report for one configuration");
    cmd_design->add_option("config", design_config, "Configuration file (JSON)")->required();
    add_common(cmd_design, design_io);
    cmd_design->add_option("--seed", design_seed, "Seed for configuration sampling");
    cmd_design->add_option("--sample-budget", design_budget, "Enumerate all configurations up to this count");
    cmd_design->add_option("--convention", design_conventions,
                           "Ion force convention: mean, ground or both (default: config, else both)")
        ->check(CLI::IsMember({"mean", "ground", "both"}));
    cmd_design->add_option("--rabi-frequency", design_rabi, "Rabi frequency for the gate error (default omega_z/10)");
    cmd_design->add_option("--freq-unit", design_unit, "Unit of frequency flags")
        ->check(CLI::IsMember({"Hz", "rad/s"}))
        ->capture_default_str();
    cmd_design->add_flag("--no-fidelity", no_fidelity, "Skip the Monte-Carlo frequency spread");
    cmd_design->add_flag("--no-oracle", no_oracle, "Skip the numeric gate-error average");
    cmd_design->add_option("--oracle-samples", design.oracle_samples, "Detuning samples for the numeric average")
        ->capture_default_str();
    cmd_design->add_option("--bus-mode", design.bus_mode, "Bus mode index")->capture_default_str();
    cmd_design->add_option("--threads", design.threads, "Worker threads (0: all cores)")->capture_default_str();

    // table1
    Common table_io;
    table_io.format = "csv";
    TableOptions table;
    std::string table_conventions = "both";
    bool table_no_error = false;
    auto* cmd_table = app.add_subcommand("table1", "Reproduce the published 171Yb+ design table");
    add_common(cmd_table, table_io);
    cmd_table->add_option("--seed", table.seed, "Seed for configuration sampling")->capture_default_str();
    cmd_table->add_option("--sample-budget", table.sample_budget, "Enumerate all configurations up to this count")
        ->capture_default_str();
    cmd_table->add_option("--convention", table_conventions, "Ion force convention: mean, ground or both")
        ->check(CLI::IsMember({"mean", "ground", "both"}))
        ->capture_default_str();
    cmd_table->add_flag("--no-fidelity", table_no_error, "Skip the gate-error column");
    cmd_table->add_option("--threads", table.threads, "Worker threads (0: all cores)")->capture_default_str();

    // modes
    Common modes_io;
    std::string modes_config;
    auto* cmd_modes = app.add_subcommand("modes", "Equilibrium positions and axial normal modes");
    cmd_modes->add_option("config", modes_config, "Configuration file (JSON)")->required();
    add_common(cmd_modes, modes_io);

    // spectrum
    Common spectrum_io;
    std::string spectrum_config;
    std::size_t spectrum_bus = 0;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "Carrier and first-order sideband frequencies per ion");
    cmd_spectrum->add_option("config", spectrum_config, "Configuration file (JSON)")->required();
    add_common(cmd_spectrum, spectrum_io);
    cmd_spectrum->add_option("--bus-mode", spectrum_bus, "Bus mode index")->capture_default_str();

    // evolve
    Common evolve_io;
    evolve_io.format = "csv";
    std::string evolve_config;
    EvolveRequest request;
    std::string transition = "carrier", demo, integrator = "bs", evolve_unit = "Hz";
    std::optional<double> rabi, detuning;
    std::optional<std::size_t> ion;
    auto* cmd_evolve = app.add_subcommand("evolve", "Spin-motion dynamics of one ion and one mode");
    cmd_evolve->add_option("config", evolve_config, "Configuration file (JSON)")->required();
    add_common(cmd_evolve, evolve_io);
    cmd_evolve->add_option("--demo", demo, "Preset: blue-sideband")->check(CLI::IsMember({"blue-sideband"}));
    cmd_evolve->add_option("--transition", transition, "carrier, blue or red")
        ->check(CLI::IsMember({"carrier", "blue", "red"}))
        ->capture_default_str();
    cmd_evolve->add_option("--ion", ion, "Ion index (default: ion nearest the trap centre)");
    cmd_evolve->add_option("--mode", request.mode, "Mode index")->capture_default_str();
    cmd_evolve->add_option("--rabi", rabi, "Rabi frequency");
    cmd_evolve->add_option("--detuning", detuning, "Drive detuning from the carrier (overrides --transition)");
    cmd_evolve->add_option("--freq-unit", evolve_unit, "Unit of --rabi and --detuning")
        ->check(CLI::IsMember({"Hz", "rad/s"}))
        ->capture_default_str();
    cmd_evolve->add_option("--eta", request.eta, "Lamb-Dicke parameter (default from the drive section)");
    cmd_evolve->add_option("--epsilon-c", request.epsilon_c, "Gradient coupling (default from the chain)");
    cmd_evolve->add_option("--duration", request.duration, "Duration in seconds (default one Rabi period)");
    cmd_evolve->add_option("--samples", request.samples, "Output samples")->capture_default_str()->check(CLI::PositiveNumber);
    cmd_evolve->add_option("--initial-spin", request.initial_spin, "Initial spin label")
        ->check(CLI::Range(0, 1))
        ->capture_default_str();
    cmd_evolve->add_option("--initial-n", request.initial_n, "Initial Fock level")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd_evolve->add_option("--n-max", request.n_max, "Fock truncation (default 30)")->check(CLI::PositiveNumber);
    cmd_evolve->add_option("--integrator", integrator, "bs (Bulirsch-Stoer) or rkf78")
        ->check(CLI::IsMember({"bs", "rkf78"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "mwion " << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun 'mwion --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (cmd_design->parsed()) {
            design.fidelity = !no_fidelity;
            design.numeric_oracle = !no_oracle;
            design.seed = design_seed;
            design.sample_budget = design_budget;
            if (design_rabi) design.rabi_frequency = to_rad_per_s(*design_rabi, design_unit);
            const auto inputs = load_inputs_file(design_config);
            if (!design_conventions.empty()) {
                design.conventions = to_conventions(design_conventions);
            } else if (inputs.convention) {
                design.conventions = {*inputs.convention};
            }
            const auto report = design_report(inputs, design, utc_timestamp());
            emit(design_io, out, [&](std::ostream& o) { write_design(o, report, to_format(design_io.format)); });
        } else if (cmd_table->parsed()) {
            table.conventions = to_conventions(table_conventions);
            table.gate_error = !table_no_error;
            const auto rows = compute_table(table);
            emit(table_io, out, [&](std::ostream& o) { write_table(o, rows, to_format(table_io.format), table.seed); });
        } else if (cmd_modes->parsed()) {
            const auto inputs = load_inputs_file(modes_config);
            emit(modes_io, out, [&](std::ostream& o) { write_modes(o, inputs, to_format(modes_io.format)); });
        } else if (cmd_spectrum->parsed()) {
            const auto inputs = load_inputs_file(spectrum_config);
            emit(spectrum_io, out,
                 [&](std::ostream& o) { write_spectrum(o, inputs, to_format(spectrum_io.format), spectrum_bus); });
        } else if (cmd_evolve->parsed()) {
            if (demo == "blue-sideband") {
                transition = "blue";
                request.initial_spin = 0;
                request.initial_n = 0;
            }
            request.transition = transition == "blue"  ? Transition::kBlue
                                 : transition == "red" ? Transition::kRed
                                                       : Transition::kCarrier;
            request.ion = ion;
            if (rabi) request.rabi_frequency = to_rad_per_s(*rabi, evolve_unit);
            if (detuning) request.detuning = to_rad_per_s(*detuning, evolve_unit);
            request.integrator = integrator == "rkf78" ? Integrator::kRungeKuttaFehlberg78 : Integrator::kBulirschStoer;
            const auto inputs = load_inputs_file(evolve_config);
            const auto result = run_evolve(inputs, request);
            emit(evolve_io, out, [&](std::ostream& o) { write_evolve(o, result, to_format(evolve_io.format)); });
            for (const auto& w : result.header.at("warnings")) err << "warning: " << w.get<std::string>() << '\n';
        }
    } catch (const ConfigError& e) {
        err << "error: invalid configuration: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StageError& e) {
        err << "error [" << e.stage() << "]: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace mwion::cli
