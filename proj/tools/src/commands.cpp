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
#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>

#include "mwion/addressing.hpp"
#include "mwion/constants.hpp"
#include "mwion/crystal.hpp"
#include "mwion/displacement.hpp"
#include "mwion/report.hpp"
#include "mwion/version.hpp"
#include "mwion/zeeman.hpp"

namespace mwion::cli {
namespace {

using nlohmann::json;

template <class F>
auto stage(const char* name, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

json tool_info() { return {{"name", "mwion"}, {"version", kVersion}}; }

std::size_t centre_ion(const ChainSolution& chain) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (std::abs(chain.positions[i]) < std::abs(chain.positions[best])) best = i;
    }
    return best;
}

std::string csv_number(const json& value) {
    return value.is_number() ? format_number(value.get<double>()) : std::string();
}

const char* transition_name(Transition t) {
    switch (t) {
        case Transition::kBlue: return "blue";
        case Transition::kRed: return "red";
        case Transition::kCarrier: break;
    }
    return "carrier";
}

}  // namespace

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

json design_report(const Inputs& inputs, const DesignOptions& options, const std::string& timestamp) {
    const TrapConfig& trap = inputs.trap;
    const QubitLevels levels(trap.species);
    const std::uint64_t seed = options.seed.value_or(inputs.seed.value_or(SpreadOptions{}.seed));

    json report;
    report["schema_version"] = kReportSchemaVersion;
    report["tool"] = tool_info();
    report["timestamp"] = timestamp;
    report["seed"] = seed;
    report["config"] = serialize(trap);
    report["gradient_b_source"] = inputs.gradient_auto ? "auto" : "config";

    const auto linear = check_linearity(trap);
    const ChainSolution chain = stage("crystal", [&] { return solve_chain(trap); });
    json chain_json = to_json(chain, trap.omega_z);
    chain_json["linear"] = linear.linear;
    chain_json["linearity_margin"] = linear.margin;
    chain_json["highest_mode_ratio"] = chain.mode_frequencies.back() / trap.omega_z;
    chain_json["highest_mode_empirical"] = highest_mode_empirical(trap.n_ions);
    if (trap.n_ions >= 2) {
        chain_json["min_spacing_m"] = min_spacing(chain.positions);
        chain_json["spacing_law_m"] = spacing_law(trap.n_ions, chain.length_scale_z0);
    } else {
        chain_json["min_spacing_m"] = nullptr;
        chain_json["spacing_law_m"] = nullptr;
    }
    report["chain"] = std::move(chain_json);

    DriveField drive = inputs.drive.value_or(DriveField{trap.species.hyperfine_splitting, 0.0, 0.0});
    double rabi = trap.omega_z / 10.0;
    if (options.rabi_frequency) {
        rabi = *options.rabi_frequency;
    } else if (drive.rabi_frequency > 0.0) {
        rabi = drive.rabi_frequency;
    }
    drive.rabi_frequency = rabi;

    report["coupling"] = stage("addressing", [&] {
        const auto coupling = build_coupling_report(trap, chain, levels, drive, options.bus_mode);
        json j = to_json(coupling);
        j["drive"] = {{"drive_frequency_rad_per_s", drive.drive_frequency},
                      {"drive_frequency_hz", drive.drive_frequency / constants::kTwoPi},
                      {"incidence_angle_rad", drive.incidence_angle},
                      {"rabi_frequency_rad_per_s", drive.rabi_frequency},
                      {"rabi_frequency_hz", drive.rabi_frequency / constants::kTwoPi}};
        const std::size_t centre = centre_ion(chain);
        j["centre_ion"] = centre;
        j["centre_epsilon_c"] = coupling.ions[centre].epsilon_c;
        return j;
    });

    if (!options.fidelity || trap.n_ions < 2) {
        report["spread"] = nullptr;
        report["gate_error"] = nullptr;
        return report;
    }
    json spread = json::object();
    json errors = json::object();
    for (auto convention : options.conventions) {
        stage("fidelity", [&] {
            SpreadOptions so;
            so.seed = seed;
            so.sample_budget = options.sample_budget.value_or(inputs.sample_budget.value_or(so.sample_budget));
            so.convention = convention;
            so.threads = options.threads;
            const auto estimate = estimate_spread(trap, levels, so);
            const auto error = estimate_gate_error(
                estimate.mean_sigma, rabi,
                options.numeric_oracle ? std::optional<std::size_t>(options.oracle_samples) : std::nullopt);
            spread[to_string(convention)] = to_json(estimate);
            errors[to_string(convention)] = to_json(error);
            return 0;
        });
    }
    report["spread"] = std::move(spread);
    report["gate_error"] = std::move(errors);
    return report;
}

void write_design(std::ostream& out, const json& report, Format format) {
    if (format == Format::kJson) {
        out << report.dump(2) << '\n';
        return;
    }
    json summary;
    for (const char* key : {"schema_version", "tool", "timestamp", "seed", "gradient_b_source"}) summary[key] = report.at(key);
    summary["gradient_b_T_per_m"] = report.at("config").at("gradient_b");
    const auto& coupling = report.at("coupling");
    summary["required_gradient_T_per_m"] = coupling.at("required_gradient_T_per_m");
    summary["min_spectral_gap_over_bus_frequency"] = coupling.at("min_spectral_gap_over_bus_frequency");
    summary["gate_error"] = json::object();
    if (report.at("gate_error").is_object()) {
        for (const auto& [name, e] : report.at("gate_error").items()) {
            summary["gate_error"][name] = {{"closed_form", e.at("error_closed_form")},
                                           {"numeric", e.at("error_numeric")},
                                           {"mean_sigma_rad_per_s", report.at("spread").at(name).at("mean_sigma_rad_per_s")}};
        }
    } else {
        summary["gate_error"] = nullptr;
    }
    out << "# " << summary.dump() << '\n';
    out << "ion,position_m,field_T,resonance_rad_per_s,resonance_hz,epsilon_c,eta,eta_effective\n";
    for (const auto& ion : coupling.at("ions")) {
        out << ion.at("ion").get<std::size_t>();
        for (const char* key : {"position_m", "field_T", "resonance_rad_per_s", "resonance_hz", "epsilon_c", "eta",
                                "eta_effective"}) {
            out << ',' << csv_number(ion.at(key));
        }
        out << '\n';
    }
}

void write_modes(std::ostream& out, const Inputs& inputs, Format format) {
    const auto chain = stage("crystal", [&] { return solve_chain(inputs.trap); });
    if (format == Format::kCsv) {
        write_modes_csv(out, chain, inputs.trap.omega_z);
        return;
    }
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = tool_info();
    j["chain"] = to_json(chain, inputs.trap.omega_z);
    out << j.dump(2) << '\n';
}

void write_spectrum(std::ostream& out, const Inputs& inputs, Format format, std::size_t bus_mode) {
    const auto chain = stage("crystal", [&] { return solve_chain(inputs.trap); });
    const QubitLevels levels(inputs.trap.species);
    const auto spec = stage("addressing", [&] { return spectrum(inputs.trap, chain, levels); });
    if (format == Format::kCsv) {
        write_spectrum_csv(out, spec);
        return;
    }
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = tool_info();
    j["bus_mode"] = bus_mode;
    j["ions"] = spectrum_to_json(spec);
    if (spec.size() >= 2) {
        const double gap = stage("addressing", [&] { return min_spectral_gap(spec, bus_mode); });
        j["min_spectral_gap_rad_per_s"] = gap;
        j["min_spectral_gap_hz"] = gap / constants::kTwoPi;
        j["min_spectral_gap_over_bus_frequency"] = gap / chain.mode_frequencies.at(bus_mode);
    } else {
        j["min_spectral_gap_rad_per_s"] = nullptr;
        j["min_spectral_gap_hz"] = nullptr;
        j["min_spectral_gap_over_bus_frequency"] = nullptr;
    }
    out << j.dump(2) << '\n';
}

EvolveOutput run_evolve(const Inputs& inputs, const EvolveRequest& request) {
    const TrapConfig& trap = inputs.trap;
    const QubitLevels levels(trap.species);
    const auto chain = stage("crystal", [&] { return solve_chain(trap); });
    const std::size_t ion = request.ion.value_or(centre_ion(chain));
    if (ion >= chain.size()) throw StageError("dynamics", "ion index out of range");
    if (request.mode >= chain.size()) throw StageError("dynamics", "mode index out of range");
    const double omega_l = chain.mode_frequencies[request.mode];

    DriveSpec drive;
    stage("addressing", [&] {
        drive.epsilon_c = request.epsilon_c.value_or(epsilon_c(trap, chain, levels, ion, request.mode));
        drive.eta = request.eta.value_or(inputs.drive ? lamb_dicke(trap, chain, *inputs.drive, ion, request.mode) : 0.0);
        return 0;
    });
    const double eta_eff = std::hypot(drive.eta, drive.epsilon_c);

    const int s = request.initial_spin;
    int target_n = request.initial_n;
    double detuning = 0.0;
    if (request.transition == Transition::kBlue) {
        target_n += s == 0 ? 1 : -1;
        detuning = omega_l;
    } else if (request.transition == Transition::kRed) {
        target_n += s == 0 ? -1 : 1;
        detuning = -omega_l;
    }
    drive.detuning = request.detuning.value_or(detuning);

    double rabi = omega_l / 10.0;
    if (request.rabi_frequency) {
        rabi = *request.rabi_frequency;
    } else if (inputs.drive && inputs.drive->rabi_frequency > 0.0) {
        rabi = inputs.drive->rabi_frequency;
    } else if (request.transition != Transition::kCarrier && eta_eff > 0.0) {
        // Keeps the off-resonant carrier light shift well below the sideband rate.
        rabi = std::min(rabi, 0.2 * eta_eff * omega_l);
    }
    drive.rabi_frequency = rabi;

    const int n_max = request.n_max.value_or(inputs.n_max.value_or(30));
    std::optional<double> analytic;
    if (target_n >= 0 && target_n <= n_max) {
        analytic = rabi_frequency_analytic(request.initial_n, target_n, eta_eff, rabi);
    }
    if (request.duration) {
        drive.duration = *request.duration;
    } else {
        const double rate = analytic && *analytic > 0.0 ? *analytic : rabi;
        drive.duration = rate > 0.0 ? 2.0 * std::numbers::pi / rate : 0.0;
    }

    EvolveOptions opts;
    opts.integrator = request.integrator;
    EvolveOutput output;
    output.series = stage("dynamics", [&] {
        return evolve_series(QuantumState::basis(s, request.initial_n, n_max), drive, omega_l, request.samples, opts);
    });

    std::optional<double> measured;
    if (target_n >= 0 && target_n <= n_max) measured = measure_rabi_frequency(output.series, 1 - s, target_n);

    json& h = output.header;
    h["schema_version"] = kReportSchemaVersion;
    h["tool"] = tool_info();
    h["config"] = serialize(trap);
    h["ion"] = ion;
    h["mode"] = request.mode;
    h["mode_frequency_rad_per_s"] = omega_l;
    h["mode_frequency_hz"] = omega_l / constants::kTwoPi;
    h["transition"] = transition_name(request.transition);
    h["drive"] = {{"rabi_frequency_rad_per_s", drive.rabi_frequency},
                  {"rabi_frequency_hz", drive.rabi_frequency / constants::kTwoPi},
                  {"detuning_rad_per_s", drive.detuning},
                  {"detuning_hz", drive.detuning / constants::kTwoPi},
                  {"eta", drive.eta},
                  {"epsilon_c", drive.epsilon_c},
                  {"eta_effective", eta_eff},
                  {"duration_s", drive.duration}};
    h["initial_state"] = {{"spin", s}, {"n", request.initial_n}};
    h["target_state"] = {{"spin", 1 - s}, {"n", target_n}};
    h["n_max"] = n_max;
    h["integrator"] = request.integrator == Integrator::kBulirschStoer ? "bulirsch-stoer" : "rkf78";
    h["relative_tolerance"] = opts.relative_tolerance;
    h["absolute_tolerance"] = opts.absolute_tolerance;
    h["rabi_frequency_analytic_rad_per_s"] = analytic ? json(*analytic) : json();
    h["rabi_frequency_measured_rad_per_s"] = measured ? json(*measured) : json();
    h["relative_deviation"] = analytic && measured && *analytic > 0.0 ? json(*measured / *analytic - 1.0) : json();
    h["norm_drift"] = std::abs(output.series.states.back().norm() - output.series.states.front().norm());
    h["steps"] = output.series.steps;
    h["warnings"] = output.series.warnings;
    return output;
}

void write_evolve(std::ostream& out, const EvolveOutput& output, Format format) {
    if (format == Format::kCsv) {
        write_time_series_csv(out, output.series, output.header);
        return;
    }
    json j = output.header;
    j["times_s"] = output.series.times;
    json pops = json::object();
    const int n_max = output.series.states.front().n_max;
    for (int sp = 0; sp < 2; ++sp) {
        for (int n = 0; n <= n_max; ++n) {
            std::vector<double> p;
            p.reserve(output.series.states.size());
            for (const auto& st : output.series.states) p.push_back(st.population(sp, n));
            pops["P_" + std::to_string(sp) + "_" + std::to_string(n)] = std::move(p);
        }
    }
    j["populations"] = std::move(pops);
    std::vector<double> norms;
    for (const auto& st : output.series.states) norms.push_back(st.norm());
    j["norm"] = std::move(norms);
    out << j.dump(2) << '\n';
}

}  // namespace mwion::cli
