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
 * The order-finding circuit as four state transformations: uniform
 * superposition on register-1, the x^a mod n fan-out into every function
 * register, the Fourier transform on register-1, and their composition.
 */
#pragma once

#include <span>
#include <string_view>

#include "shorsim/registers.hpp"

namespace shorsim {

enum class QftMethod { direct, gates };

[[nodiscard]] std::string_view to_string(QftMethod m);
/// Throws RangeError on unknown names.
[[nodiscard]] QftMethod qft_method_from_string(std::string_view name);

struct PipelineOptions {
    unsigned ell{1};
    Backend backend{Backend::sparse};
    QftMethod qft{QftMethod::direct};
    unsigned qubit_cap{kDefaultQubitCap};
};

/// q^{-1/2} at (a, 0, ..., 0) for every a in [0, q).
[[nodiscard]] StateVector init_uniform(const ProblemInstance &inst, unsigned ell,
                                       Backend backend = Backend::sparse,
                                       unsigned qubit_cap = kDefaultQubitCap);

/**
 * Moves the amplitude at (a, 0, ..., 0) to (a, f, ..., f) with
 * f = x^a mod n. Throws StageOrderError when any nonzero amplitude already
 * has a nonzero function register.
 */
[[nodiscard]] StateVector apply_modexp_fanout(StateVector state,
                                              const ProblemInstance &inst);

/// Matrix-form transform on register-1, independently for each function
/// register content.
[[nodiscard]] StateVector apply_qft_register1_direct(StateVector state,
                                                     const ProblemInstance &inst);

/// Same transform built from Hadamards, controlled phases and a reversal.
[[nodiscard]] StateVector apply_qft_register1_gates(StateVector state,
                                                    const ProblemInstance &inst);

[[nodiscard]] StateVector apply_qft_register1(StateVector state,
                                              const ProblemInstance &inst,
                                              QftMethod method);

/// Runs all three stages and returns the pre-measurement state. Every stage
/// is checked to keep the norm at 1 within kNormTolerance.
[[nodiscard]] StateVector run_pipeline(const ProblemInstance &inst,
                                       const PipelineOptions &options = {});

struct LinearityReport {
    std::size_t sample_size{0};
    double max_discrepancy{0.0};
    bool within_tolerance{false};
};

/**
 * Compares the fan-out applied to the equal superposition over `sample_as`
 * against the sum of the fan-out applied to each |a>|0> separately.
 * Duplicate entries in sample_as are ignored.
 */
[[nodiscard]] LinearityReport linearity_check(const ProblemInstance &inst,
                                              std::span<const u64> sample_as,
                                              Backend backend = Backend::sparse,
                                              unsigned ell = 1);

} // namespace shorsim
