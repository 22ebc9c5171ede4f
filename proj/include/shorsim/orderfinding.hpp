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
 * Seeded sampling from an exact outcome distribution and the classical
 * loop around it: order recovery, the factoring driver, and the
 * single-shot success-rate estimator.
 *
 * Randomness is a std::mt19937_64. Uniform reals take the top 53 bits of
 * one draw; bounded integers use rejection sampling. Both are spelled out
 * here so runs replay bit-for-bit across standard libraries.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shorsim/distributions.hpp"
#include "shorsim/numtheory.hpp"
#include "shorsim/pipeline.hpp"

namespace shorsim {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
[[nodiscard]] double uniform01(Rng &rng);
/// Uniform integer in [0, range), range >= 1.
[[nodiscard]] u64 uniform_below(Rng &rng, u64 range);
/// Independent per-trial seed derived from (seed, index) with splitmix64.
[[nodiscard]] u64 derive_seed(u64 seed, u64 index);

/// Inverse-CDF sampler over the distribution's entries in ascending order.
class OutcomeSampler {
  public:
    explicit OutcomeSampler(const OutcomeDistribution &dist);
    [[nodiscard]] const Outcome &sample(Rng &rng) const;

  private:
    const OutcomeDistribution *dist_;
    std::vector<double> cumulative_;
};

[[nodiscard]] std::vector<Outcome> sample_outcomes(const OutcomeDistribution &dist,
                                                   std::size_t count, u64 seed);

struct CandidateCheck {
    u64 candidate{0};
    bool verified{false};
};

struct SampleAttempt {
    std::size_t attempt{0}; ///< 1-based draw number
    Outcome outcome;
    std::vector<Rational> convergents;
    std::vector<CandidateCheck> candidates;
    std::optional<u64> recovered; ///< first verified candidate
};

struct OrderTrace {
    ProblemInstance instance;
    u64 seed{0};
    std::size_t max_samples{0};
    u64 multiplier_bound{1};
    std::vector<SampleAttempt> attempts;
    std::optional<u64> order;
    /// Verified candidate before reduction, when it was a proper multiple.
    std::optional<u64> reduced_from;
};

struct OrderResult {
    std::optional<u64> order;
    OrderTrace trace;
};

/// One sample's continued-fraction scan, recording every candidate tried.
[[nodiscard]] SampleAttempt examine_sample(const ProblemInstance &inst,
                                           const Outcome &outcome,
                                           u64 multiplier_bound);

/// Smallest divisor t of a verified candidate with x^t == 1 (mod n).
[[nodiscard]] u64 reduce_to_order(u64 candidate, u64 x, u64 n);

/**
 * Draws up to max_samples outcomes and returns the first recovered order.
 * A verified candidate is reduced to the minimal order before returning.
 */
[[nodiscard]] OrderResult find_order(const ProblemInstance &inst, std::size_t max_samples,
                                     u64 multiplier_bound, u64 seed,
                                     const PipelineOptions &options = {});

/// Same, drawing from a prepared distribution with a caller-owned generator.
[[nodiscard]] OrderResult find_order(const ProblemInstance &inst,
                                     const OutcomeDistribution &dist,
                                     std::size_t max_samples, u64 multiplier_bound,
                                     Rng &rng, u64 seed_for_trace);

struct FactorOptions {
    std::size_t max_samples_per_base{8};
    u64 multiplier_bound{8};
    PipelineOptions pipeline{};
};

struct FactorAttempt {
    std::size_t attempt{0};
    u64 x{0};
    std::optional<u64> shared_factor; ///< gcd(x, n) when > 1
    std::optional<OrderTrace> order_search;
    std::optional<u64> order;
    std::string outcome; ///< "gcd", "factored", or the failure reason
};

struct FactorTrace {
    u64 n{0};
    u64 seed{0};
    std::size_t max_attempts{0};
    std::vector<FactorAttempt> attempts;
    std::optional<FactorPair> factors;
    std::string failure_reason;
};

struct FactorResult {
    std::optional<FactorPair> factors;
    FactorTrace trace;
};

/// Throws UnsuitableInputError when n is even, prime, or a prime power.
void check_factorable(u64 n);

/**
 * Each attempt draws x uniformly from [2, n-1] with the shared generator,
 * then (if x is coprime to n) draws order-finding samples from the same
 * generator. Returns on the first factor pair.
 */
[[nodiscard]] FactorResult factor(u64 n, std::size_t max_attempts, u64 seed,
                                  const FactorOptions &options = {});

struct SuccessRateReport {
    u64 r{0};
    u64 phi_r{0};
    std::size_t trials{0};
    std::size_t successes{0};
    double empirical_rate{0.0};
    double exact_rate{0.0};
    double sigma{0.0}; ///< binomial standard error at exact_rate
    bool within_three_sigma{false};
    double bound_joint{0.0};       ///< phi(r) / (3 r)
    double bound_conditional{0.0}; ///< phi(r) / (3 r^2)
};

/// Fraction of single-sample trials whose c yields the order. Trial i uses
/// a generator seeded with derive_seed(seed, i).
[[nodiscard]] SuccessRateReport success_rate_estimate(const ProblemInstance &inst,
                                                      std::size_t trials,
                                                      u64 multiplier_bound, u64 seed,
                                                      const PipelineOptions &options = {});

} // namespace shorsim
