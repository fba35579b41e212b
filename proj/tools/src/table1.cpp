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
#include "table1.hpp"

#include <cmath>

#include "mwion/addressing.hpp"
#include "mwion/constants.hpp"
#include "mwion/crystal.hpp"
#include "mwion/report.hpp"
#include "mwion/version.hpp"
#include "mwion/zeeman.hpp"

namespace mwion::cli {

const std::vector<TableCell>& published_table() {
    static const std::vector<TableCell> cells{
        {10, 1e5, 9.89, 0.0075, 3.4e-6}, {20, 1e5, 22.1, 0.012, 5.2e-5}, {40, 1e5, 54.7, 0.021, 1.1e-3},
        {10, 1e6, 459, 0.011, 1.6e-5},   {20, 1e6, 1030, 0.018, 2.4e-4}, {40, 1e6, 2540, 0.031, 4.9e-3},
    };
    return cells;
}

std::vector<TableRow> compute_table(const TableOptions& options) {
    std::vector<TableRow> rows;
    for (const auto& cell : published_table()) {
        TrapConfig trap;
        trap.species = ytterbium171();
        trap.n_ions = cell.n_ions;
        trap.omega_z = constants::kTwoPi * cell.trap_frequency_hz;
        trap.omega_r = 1.25 * linearity_threshold(cell.n_ions) * trap.omega_z;
        const QubitLevels levels(trap.species);
        trap.gradient_b = required_gradient(trap, levels);

        const auto chain = solve_chain(trap);
        std::size_t centre = 0;
        for (std::size_t i = 1; i < chain.size(); ++i) {
            if (std::abs(chain.positions[i]) < std::abs(chain.positions[centre])) centre = i;
        }
        const double eps = epsilon_c(trap, chain, levels, centre, 0);

        rows.push_back({"gradient_T_per_m", cell.n_ions, cell.trap_frequency_hz, "", cell.gradient, trap.gradient_b});
        rows.push_back({"epsilon_c", cell.n_ions, cell.trap_frequency_hz, "", cell.epsilon_c, eps});
        if (!options.gate_error) continue;
        for (auto convention : options.conventions) {
            SpreadOptions so;
            so.seed = options.seed;
            so.sample_budget = options.sample_budget;
            so.convention = convention;
            so.threads = options.threads;
            const auto spread = estimate_spread(trap, levels, so);
            rows.push_back({"gate_error", cell.n_ions, cell.trap_frequency_hz, to_string(convention), cell.gate_error,
                            gate_error_closed_form(spread.mean_sigma, trap.omega_z / 10.0)});
        }
    }
    return rows;
}

void write_table(std::ostream& out, const std::vector<TableRow>& rows, Format format, std::uint64_t seed) {
    nlohmann::json meta;
    meta["schema_version"] = kReportSchemaVersion;
    meta["tool"] = {{"name", "mwion"}, {"version", kVersion}};
    meta["seed"] = seed;
    meta["species"] = "171Yb+";
    meta["rabi_frequency"] = "omega_z/10";
    if (format == Format::kCsv) {
        out << "# " << meta.dump() << '\n';
        out << "quantity,n_ions,trap_frequency_hz,convention,published,computed,relative_deviation\n";
        for (const auto& r : rows) {
            out << r.quantity << ',' << r.n_ions << ',' << format_number(r.trap_frequency_hz) << ',' << r.convention
                << ',' << format_number(r.published) << ',' << format_number(r.computed) << ','
                << format_number(r.relative_deviation()) << '\n';
        }
        return;
    }
    nlohmann::json j = meta;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"quantity", r.quantity},
                             {"n_ions", r.n_ions},
                             {"trap_frequency_hz", r.trap_frequency_hz},
                             {"convention", r.convention.empty() ? nlohmann::json() : nlohmann::json(r.convention)},
                             {"published", r.published},
                             {"computed", r.computed},
                             {"relative_deviation", r.relative_deviation()}});
    }
    out << j.dump(2) << '\n';
}

}  // namespace mwion::cli
