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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "shorsim/distributions.hpp"
#include "shorsim/entanglement.hpp"
#include "shorsim/errors.hpp"
#include "shorsim/orderfinding.hpp"
#include "shorsim/report_json.hpp"

namespace shorsim::cli {

using nlohmann::json;

namespace {

constexpr double kLocalityTolerance = 1e-10;

std::string_view to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::both:
        break;
    }
    return "both";
}

bool wants_json(const ExperimentConfig &c) { return c.format != OutputFormat::csv; }
bool wants_csv(const ExperimentConfig &c) { return c.format != OutputFormat::json; }

std::filesystem::path output_path(const ExperimentConfig &c, const std::string &name) {
    std::filesystem::create_directories(c.output_dir);
    return std::filesystem::path(c.output_dir) / name;
}

void write_file(const std::filesystem::path &path,
                const std::function<void(std::ostream &)> &body) {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    body(f);
}

void write_json_file(const ExperimentConfig &c, const std::string &name, const json &doc) {
    write_file(output_path(c, name), [&](std::ostream &o) { o << doc.dump(2) << '\n'; });
}

json envelope(const ExperimentConfig &config, const ProblemInstance &inst) {
    return {{"schema_version", kSchemaVersion},
            {"config", to_json(config)},
            {"instance", to_json(inst)}};
}

// Rejects even n and oversize layouts before anything is allocated.
ProblemInstance prepare(const ExperimentConfig &config, unsigned ell) {
    if (config.n < 3) {
        throw UnsuitableInputError("unsuitable input: n must be at least 3");
    }
    if (config.n % 2 == 0) {
        throw UnsuitableInputError("unsuitable input: n = " + std::to_string(config.n) +
                                   " is even");
    }
    const ProblemInstance inst = ProblemInstance::make(config.n, resolve_base(config));
    (void)RegisterLayout::for_instance(inst, ell, config.qubit_cap);
    return inst;
}

PipelineOptions pipeline_options(const ExperimentConfig &config, unsigned ell) {
    return PipelineOptions{ell, config.backend, config.qft, config.qubit_cap};
}

void maybe_dump_state(const ExperimentConfig &config, const StateVector &state) {
    if (config.dump_state) {
        write_file(*config.dump_state, [&](std::ostream &o) { write_state(o, state); });
    }
}

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitVerdictFailed;
    }
}

} // namespace

json to_json(const ExperimentConfig &config) {
    return {{"n", config.n},
            {"x", config.x ? json(*config.x) : json(nullptr)},
            {"ell", config.ell},
            {"backend", shorsim::to_string(config.backend)},
            {"qft", shorsim::to_string(config.qft)},
            {"seed", config.seed},
            {"qubit_cap", config.qubit_cap},
            {"output_dir", config.output_dir},
            {"format", to_string(config.format)},
            {"dump_state", config.dump_state ? json(*config.dump_state) : json(nullptr)},
            {"max_attempts", config.max_attempts},
            {"max_samples", config.max_samples},
            {"multiplier_bound", config.multiplier_bound}};
}

u64 resolve_base(const ExperimentConfig &config) {
    if (config.x) {
        return *config.x;
    }
    if (config.n < 3) {
        throw RangeError("n must be at least 3");
    }
    Rng rng(config.seed);
    for (int tries = 0; tries < 10000; ++tries) {
        const u64 x = 2 + uniform_below(rng, config.n - 2);
        if (gcd(x, config.n) == 1) {
            return x;
        }
    }
    throw RangeError("no base coprime to n found");
}

int cmd_distribution(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const ProblemInstance inst = prepare(config, config.ell);
        const StateVector state = run_pipeline(inst, pipeline_options(config, config.ell));
        maybe_dump_state(config, state);
        const OutcomeDistribution dist = measurement_distribution(state);

        json doc = envelope(config, inst);
        doc["r"] = multiplicative_order(inst.x, inst.n);
        doc["distribution"] = distribution_summary(dist);
        if (wants_csv(config)) {
            write_file(output_path(config, "distribution.csv"),
                       [&](std::ostream &o) { write_csv(o, dist); });
        }
        if (wants_json(config)) {
            write_json_file(config, "distribution.json", doc);
        }
        out << doc.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_audit(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    if (config.ell < 2) {
        err << "usage error: audit needs --ell 2 or more\n";
        return kExitInvalidInput;
    }
    return guarded(err, [&] {
        const ProblemInstance inst = prepare(config, config.ell);
        const StateVector single_state = run_pipeline(inst, pipeline_options(config, 1));
        const StateVector multi_state =
            run_pipeline(inst, pipeline_options(config, config.ell));
        maybe_dump_state(config, multi_state);
        const OutcomeDistribution single = measurement_distribution(single_state);
        const OutcomeDistribution multi = measurement_distribution(multi_state);
        const AuditReport rep = contradiction_audit(inst, single, multi);

        json doc = envelope(config, inst);
        doc["audit"] = to_json(rep);
        if (wants_json(config)) {
            write_json_file(config, "audit.json", doc);
        }
        if (wants_csv(config)) {
            write_file(output_path(config, "audit_distribution.csv"),
                       [&](std::ostream &o) { write_csv(o, multi); });
        }
        out << doc.dump(2) << '\n';
        return rep.passes() ? kExitOk : kExitVerdictFailed;
    });
}

int cmd_bound(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const ProblemInstance inst = prepare(config, 1);
        const BoundReport rep = shor_bound_report(inst);

        json doc = envelope(config, inst);
        doc["bound"] = to_json(rep);
        if (wants_json(config)) {
            write_json_file(config, "bound.json", doc);
        }
        if (wants_csv(config)) {
            write_file(output_path(config, "bound.csv"), [&](std::ostream &o) {
                o << "c,d,residue,gcd_d_r,min_probability,clears_weak_bound\n";
                for (const BoundRow &row : rep.rows) {
                    o << row.c << ',' << row.d << ',' << row.residue << ',' << row.gcd_dr
                      << ',' << json(row.min_probability).dump() << ','
                      << (row.clears_weak_bound ? 1 : 0) << '\n';
                }
            });
        }
        out << doc.dump(2) << '\n';
        return rep.all_clear() ? kExitOk : kExitVerdictFailed;
    });
}

int cmd_factor(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        check_factorable(config.n);
        FactorOptions opts;
        opts.max_samples_per_base = config.max_samples;
        opts.multiplier_bound = config.multiplier_bound;
        opts.pipeline = pipeline_options(config, 1);
        const FactorResult res = factor(config.n, config.max_attempts, config.seed, opts);

        json doc = {{"schema_version", kSchemaVersion},
                    {"config", to_json(config)},
                    {"trace", to_json(res.trace)}};
        if (wants_json(config)) {
            write_json_file(config, "factor.json", doc);
        }
        if (res.factors) {
            out << config.n << " = " << res.factors->f1 << " × " << res.factors->f2
                << '\n';
        } else {
            out << "no factors of " << config.n << ": " << res.trace.failure_reason << '\n';
        }
        if (config.trace) {
            out << doc.dump(2) << '\n';
        }
        return res.factors ? kExitOk : kExitVerdictFailed;
    });
}

int cmd_entanglement(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const ProblemInstance inst = prepare(config, config.ell);
        const PipelineOptions opts = pipeline_options(config, config.ell);
        const LocalityReport locality = qft_locality_check(inst, opts);
        const StateVector state = run_pipeline(inst, opts);
        maybe_dump_state(config, state);
        const OutcomeDistribution dist = measurement_distribution(state);

        json ent;
        ent["locality"] = to_json(locality);
        json cuts = json::array();
        for (unsigned cut = 1; cut <= config.ell; ++cut) {
            cuts.push_back(to_json(schmidt_spectrum(state, cut)));
        }
        ent["final_state_cuts"] = cuts;
        json correlations = json::array();
        for (unsigned i = 2; i <= config.ell + 1; ++i) {
            for (unsigned j = i + 1; j <= config.ell + 1; ++j) {
                correlations.push_back(to_json(register_correlation(dist, i, j)));
            }
        }
        ent["correlations"] = correlations;

        json doc = envelope(config, inst);
        doc["entanglement"] = ent;
        if (wants_json(config)) {
            write_json_file(config, "entanglement.json", doc);
        }
        if (wants_csv(config)) {
            write_file(output_path(config, "entanglement_distribution.csv"),
                       [&](std::ostream &o) { write_csv(o, dist); });
        }
        out << doc.dump(2) << '\n';
        return locality.max_deviation <= kLocalityTolerance ? kExitOk : kExitVerdictFailed;
    });
}

} // namespace shorsim::cli
