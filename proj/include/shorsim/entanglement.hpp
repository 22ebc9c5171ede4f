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
 * Bipartite entanglement diagnostics across register cuts.
 */
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "shorsim/distributions.hpp"
#include "shorsim/pipeline.hpp"
#include "shorsim/registers.hpp"

namespace shorsim {

inline constexpr double kEigenvalueFloor = 1e-14;
inline constexpr std::size_t kDefaultSchmidtDimensionCap = 4096;

struct SchmidtSpectrum {
    /// Registers 1..cut_after sit on the left of the cut.
    unsigned cut_after{1};
    /// Non-increasing, each in [0, 1], entries below kEigenvalueFloor dropped.
    std::vector<double> eigenvalues;
};

/**
 * Schmidt coefficients (squared) across the cut between register
 * `cut_after` and `cut_after + 1`. Only rows and columns carrying nonzero
 * amplitudes enter the Gram matrix, which is formed on the smaller side.
 *
 * Throws RangeError for cut_after outside [1, ell] and CapacityError when
 * both compacted sides exceed `dimension_cap`.
 */
[[nodiscard]] SchmidtSpectrum schmidt_spectrum(
    const StateVector &state, unsigned cut_after,
    std::size_t dimension_cap = kDefaultSchmidtDimensionCap);

/// -sum lambda log2 lambda, in bits.
[[nodiscard]] double von_neumann_entropy(const SchmidtSpectrum &spectrum);

struct LocalityReport {
    SchmidtSpectrum before;
    SchmidtSpectrum after;
    double entropy_before{0.0};
    double entropy_after{0.0};
    double max_deviation{0.0};
};

/// Spectrum across the (register-1 | function registers) cut just before and
/// just after the Fourier transform.
[[nodiscard]] LocalityReport qft_locality_check(const ProblemInstance &inst,
                                                const PipelineOptions &options);

struct CorrelationReport {
    unsigned i{0};
    unsigned j{0};
    double p_equal{0.0};
    double p_unequal{0.0};
    std::map<std::pair<u64, u64>, double> contingency;
};

/// Joint statistics of function registers at positions i and j (both >= 2).
[[nodiscard]] CorrelationReport register_correlation(const OutcomeDistribution &dist,
                                                     unsigned i, unsigned j);

} // namespace shorsim
