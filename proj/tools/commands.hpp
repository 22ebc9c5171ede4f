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
/**
 * @file
 * Command implementations behind the `shorsim` executable.
 *
 * Every command prints its result to `out`, writes files under
 * config.output_dir, and returns an exit status: 0 when the run succeeded
 * and its claims verified, 1 when it ran but a verdict failed, 2 on invalid
 * input.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "shorsim/pipeline.hpp"
#include "shorsim/registers.hpp"

namespace shorsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitInvalidInput = 2;

enum class OutputFormat { json, csv, both };

struct ExperimentConfig {
    u64 n{0};
    std::optional<u64> x;
    unsigned ell{1};
    Backend backend{Backend::sparse};
    QftMethod qft{QftMethod::direct};
    u64 seed{1};
    unsigned qubit_cap{kDefaultQubitCap};
    std::string output_dir{"."};
    OutputFormat format{OutputFormat::both};
    std::optional<std::string> dump_state;
    bool trace{false};
    std::size_t max_attempts{100};
    std::size_t max_samples{8};
    u64 multiplier_bound{8};
};

[[nodiscard]] nlohmann::json to_json(const ExperimentConfig &config);

/**
 * Picks x when absent: draws uniformly from [2, n-1] with a generator
 * seeded by config.seed until a value coprime to n comes up.
 */
[[nodiscard]] u64 resolve_base(const ExperimentConfig &config);

int cmd_distribution(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_audit(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_bound(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_factor(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_entanglement(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

} // namespace shorsim::cli
