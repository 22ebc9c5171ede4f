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
 * JSON encodings of reports and traces. Field names are stable; any
 * incompatible change bumps kSchemaVersion.
 */
#pragma once

#include <json.hpp>

#include "shorsim/distributions.hpp"
#include "shorsim/entanglement.hpp"
#include "shorsim/orderfinding.hpp"
#include "shorsim/pipeline.hpp"

namespace shorsim {

inline constexpr int kSchemaVersion = 1;

[[nodiscard]] nlohmann::json to_json(const ProblemInstance &inst);
[[nodiscard]] nlohmann::json to_json(const Rational &r);
[[nodiscard]] nlohmann::json to_json(const FactorPair &f);
[[nodiscard]] nlohmann::json to_json(const BoundReport &rep);
[[nodiscard]] nlohmann::json to_json(const AuditReport &rep);
[[nodiscard]] nlohmann::json to_json(const SchmidtSpectrum &spec);
[[nodiscard]] nlohmann::json to_json(const LocalityReport &rep);
[[nodiscard]] nlohmann::json to_json(const CorrelationReport &rep);
[[nodiscard]] nlohmann::json to_json(const LinearityReport &rep);
[[nodiscard]] nlohmann::json to_json(const SampleAttempt &att);
[[nodiscard]] nlohmann::json to_json(const OrderTrace &trace);
[[nodiscard]] nlohmann::json to_json(const FactorTrace &trace);
[[nodiscard]] nlohmann::json to_json(const SuccessRateReport &rep);

/// Summary: outcome count, the `top` likeliest outcomes, and the marginal of
/// every register.
[[nodiscard]] nlohmann::json distribution_summary(const OutcomeDistribution &dist,
                                                  std::size_t top = 16);

} // namespace shorsim
