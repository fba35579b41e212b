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
#include "mwion/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "mwion/constants.hpp"

namespace mwion {
namespace {

using nlohmann::json;

void put_frequency(json& j, const std::string& name, double omega) {
    j[name + "_rad_per_s"] = omega;
    j[name + "_hz"] = omega / constants::kTwoPi;
}

}  // namespace

std::string format_number(double value) {
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("format_number failed");
    return {buffer, end};
}

json to_json(const ChainSolution& chain, double omega_z) {
    json j;
    j["n_ions"] = chain.size();
    j["length_scale_z0_m"] = chain.length_scale_z0;
    j["positions_m"] = chain.positions;
    json modes = json::array();
    for (std::size_t l = 0; l < chain.mode_frequencies.size(); ++l) {
        json m;
        m["index"] = l;
        put_frequency(m, "frequency", chain.mode_frequencies[l]);
        m["ratio_to_omega_z"] = chain.mode_frequencies[l] / omega_z;
        std::vector<double> v(chain.mode_vectors.rows());
        for (Eigen::Index i = 0; i < chain.mode_vectors.rows(); ++i) {
            v[static_cast<std::size_t>(i)] = chain.mode_vectors(i, static_cast<Eigen::Index>(l));
        }
        m["vector"] = v;
        modes.push_back(std::move(m));
    }
    j["modes"] = std::move(modes);
    j["warnings"] = chain.warnings;
    return j;
}

json to_json(const CouplingReport& report) {
    json j;
    j["bus_mode"] = report.bus_mode;
    put_frequency(j, "bus_frequency", report.bus_frequency);
    json ions = json::array();
    for (std::size_t i = 0; i < report.ions.size(); ++i) {
        const auto& ion = report.ions[i];
        json row;
        row["ion"] = i;
        row["position_m"] = ion.position;
        row["field_T"] = ion.field;
        put_frequency(row, "resonance", ion.resonance);
        row["epsilon_c"] = ion.epsilon_c;
        row["eta"] = ion.eta;
        row["eta_effective"] = ion.eta_effective;
        ions.push_back(std::move(row));
    }
    j["ions"] = std::move(ions);
    j["required_gradient_T_per_m"] = report.required_gradient ? json(*report.required_gradient) : json();
    if (report.min_spectral_gap) {
        put_frequency(j, "min_spectral_gap", *report.min_spectral_gap);
        j["min_spectral_gap_over_bus_frequency"] = *report.min_spectral_gap / report.bus_frequency;
    } else {
        j["min_spectral_gap_rad_per_s"] = nullptr;
        j["min_spectral_gap_hz"] = nullptr;
        j["min_spectral_gap_over_bus_frequency"] = nullptr;
    }
    return j;
}

json to_json(const SpreadEstimate& spread) {
    json j;
    put_frequency(j, "mean_sigma", spread.mean_sigma);
    put_frequency(j, "max_deviation", spread.max_deviation);
    j["sigma_per_ion_rad_per_s"] = spread.sigma_per_ion;
    j["mean_frequency_rad_per_s"] = spread.mean_frequency;
    j["sample_count"] = spread.sample_count;
    j["exhaustive"] = spread.exhaustive;
    j["seed"] = spread.seed;
    j["ion_force_convention"] = to_string(spread.convention);
    return j;
}

json to_json(const GateErrorEstimate& error) {
    json j;
    put_frequency(j, "rabi_frequency", error.rabi_frequency);
    j["error_closed_form"] = error.error_closed_form;
    j["error_numeric"] = error.error_numeric ? json(*error.error_numeric) : json();
    return j;
}

void write_csv(std::ostream& out, const CouplingReport& report) {
    out << "ion,position_m,field_T,resonance_rad_per_s,resonance_hz,epsilon_c,eta,eta_effective\n";
    for (std::size_t i = 0; i < report.ions.size(); ++i) {
        const auto& ion = report.ions[i];
        out << i << ',' << format_number(ion.position) << ',' << format_number(ion.field) << ','
            << format_number(ion.resonance) << ',' << format_number(ion.resonance / constants::kTwoPi)
            << ',' << format_number(ion.epsilon_c) << ',' << format_number(ion.eta) << ','
            << format_number(ion.eta_effective) << '\n';
    }
}

void write_modes_csv(std::ostream& out, const ChainSolution& chain, double omega_z) {
    const auto n = chain.mode_vectors.rows();
    out << "mode,frequency_rad_per_s,frequency_hz,ratio_to_omega_z";
    for (Eigen::Index i = 0; i < n; ++i) out << ",v" << i;
    out << '\n';
    for (std::size_t l = 0; l < chain.mode_frequencies.size(); ++l) {
        const double w = chain.mode_frequencies[l];
        out << l << ',' << format_number(w) << ',' << format_number(w / constants::kTwoPi) << ','
            << format_number(w / omega_z);
        for (Eigen::Index i = 0; i < n; ++i) {
            out << ',' << format_number(chain.mode_vectors(i, static_cast<Eigen::Index>(l)));
        }
        out << '\n';
    }
}

void write_spectrum_csv(std::ostream& out, const std::vector<IonSpectrum>& spectrum) {
    out << "ion,line,mode,frequency_rad_per_s,frequency_hz\n";
    auto row = [&](std::size_t ion, const char* line, const std::string& mode, double w) {
        out << ion << ',' << line << ',' << mode << ',' << format_number(w) << ','
            << format_number(w / constants::kTwoPi) << '\n';
    };
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        row(i, "carrier", "", spectrum[i].carrier);
        for (std::size_t l = 0; l < spectrum[i].red.size(); ++l) {
            row(i, "red", std::to_string(l), spectrum[i].red[l]);
            row(i, "blue", std::to_string(l), spectrum[i].blue[l]);
        }
    }
}

json spectrum_to_json(const std::vector<IonSpectrum>& spectrum) {
    json arr = json::array();
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        json j;
        j["ion"] = i;
        j["position_m"] = spectrum[i].position;
        put_frequency(j, "carrier", spectrum[i].carrier);
        j["red_rad_per_s"] = spectrum[i].red;
        j["blue_rad_per_s"] = spectrum[i].blue;
        arr.push_back(std::move(j));
    }
    return arr;
}

void write_time_series_csv(std::ostream& out, const TimeSeries& series, const json& header) {
    out << "# " << header.dump() << '\n';
    if (series.states.empty()) return;
    const int n_max = series.states.front().n_max;
    out << "time_s";
    for (int s = 0; s < 2; ++s) {
        for (int n = 0; n <= n_max; ++n) out << ",P_" << s << '_' << n;
    }
    out << ",norm\n";
    for (std::size_t k = 0; k < series.states.size(); ++k) {
        const auto& st = series.states[k];
        out << format_number(series.times[k]);
        for (int s = 0; s < 2; ++s) {
            for (int n = 0; n <= n_max; ++n) out << ',' << format_number(st.population(s, n));
        }
        out << ',' << format_number(st.norm()) << '\n';
    }
}

}  // namespace mwion
