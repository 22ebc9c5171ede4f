// Copyright 2026 The shorsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "commands.hpp"

int main(int argc, char **argv) {
    using namespace shorsim;
    using namespace shorsim::cli;

    CLI::App app{"Order-finding state-vector simulator and probability auditor"};
    app.require_subcommand(1);
    app.fallthrough();

    ExperimentConfig config;
    std::optional<u64> x;
    std::string backend = "sparse";
    std::string qft = "direct";
    std::string format = "both";
    std::string dump_state;
    bool scalar_kernels = false;

    app.add_option("--n", config.n, "Integer to factor / modulus")->required();
    app.add_option("--x", x, "Base coprime to n (random from --seed when omitted)");
    app.add_option("--ell", config.ell, "Number of function registers")
        ->check(CLI::PositiveNumber);
    app.add_option("--backend", backend, "State storage")
        ->check(CLI::IsMember({"dense", "sparse"}));
    app.add_option("--qft", qft, "Fourier transform implementation")
        ->check(CLI::IsMember({"direct", "gates"}));
    app.add_option("--seed", config.seed, "Seed for every random draw");
    app.add_option("--qubit-cap", config.qubit_cap, "Maximum total qubits");
    app.add_option("--output-dir", config.output_dir, "Directory for output files");
    app.add_option("--format", format, "Files to write")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    app.add_option("--dump-state", dump_state, "Write the final state snapshot here");
    app.add_flag("--trace", config.trace, "Print the full run trace (factor)");
    app.add_option("--max-attempts", config.max_attempts, "Base draws for factor");
    app.add_option("--max-samples", config.max_samples, "Samples per base for factor");
    app.add_option("--multiplier-bound", config.multiplier_bound,
                   "Multiples of each convergent denominator to try");
    app.add_flag("--scalar-kernels", scalar_kernels,
                 "Use the scalar reference kernels instead of SIMD");

    using Command = int (*)(const ExperimentConfig &, std::ostream &, std::ostream &);
    const std::map<std::string, std::pair<std::string, Command>> commands{
        {"distribution", {"Exact outcome distribution (CSV + JSON summary)", cmd_distribution}},
        {"audit", {"Compare one and several function registers", cmd_audit}},
        {"bound", {"Per-outcome lower-bound report", cmd_bound}},
        {"factor", {"Seeded end-to-end factoring run", cmd_factor}},
        {"entanglement", {"Schmidt spectra, entropies and correlations", cmd_entanglement}},
    };
    for (const auto &[name, entry] : commands) {
        app.add_subcommand(name, entry.first);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        (void)app.exit(e);
        return kExitInvalidInput;
    }

    config.x = x;
    config.backend = backend_from_string(backend);
    config.qft = qft_method_from_string(qft);
    config.format = format == "json" ? OutputFormat::json
                    : format == "csv" ? OutputFormat::csv
                                      : OutputFormat::both;
    if (!dump_state.empty()) {
        config.dump_state = dump_state;
    }
    kernels::force_scalar(scalar_kernels);

    for (const auto &[name, entry] : commands) {
        if (app.got_subcommand(name)) {
            return entry.second(config, std::cout, std::cerr);
        }
    }
    return kExitInvalidInput;
}
