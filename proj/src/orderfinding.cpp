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

#include "shorsim/orderfinding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "shorsim/errors.hpp"

namespace shorsim {

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

u64 uniform_below(Rng &rng, u64 range) {
    if (range == 0) {
        throw RangeError("uniform_below needs a positive range");
    }
    // Reject the low sliver that would bias the modulo.
    const u64 threshold = (0 - range) % range;
    while (true) {
        const u64 v = rng();
        if (v >= threshold) {
            return v % range;
        }
    }
}

u64 derive_seed(u64 seed, u64 index) {
    u64 z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

OutcomeSampler::OutcomeSampler(const OutcomeDistribution &dist) : dist_(&dist) {
    if (dist.entries().empty()) {
        throw RangeError("cannot sample from an empty distribution");
    }
    cumulative_.reserve(dist.size());
    double acc = 0.0;
    for (const auto &e : dist.entries()) {
        acc += e.probability;
        cumulative_.push_back(acc);
    }
}

const Outcome &OutcomeSampler::sample(Rng &rng) const {
    const double u = uniform01(rng) * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        --it;
    }
    return dist_->entries()[static_cast<std::size_t>(it - cumulative_.begin())].outcome;
}

std::vector<Outcome> sample_outcomes(const OutcomeDistribution &dist, std::size_t count,
                                     u64 seed) {
    std::vector<Outcome> out;
    if (count == 0) {
        return out;
    }
    const OutcomeSampler sampler(dist);
    Rng rng(seed);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(sampler.sample(rng));
    }
    return out;
}

SampleAttempt examine_sample(const ProblemInstance &inst, const Outcome &outcome,
                             u64 multiplier_bound) {
    SampleAttempt att;
    att.outcome = outcome;
    att.convergents = continued_fraction_convergents(outcome.at(0), inst.q);
    for (const Rational &conv : att.convergents) {
        const u64 t = conv.denominator;
        if (t >= inst.n) {
            break;
        }
        for (u64 m = 1; m <= multiplier_bound && m * t < inst.n; ++m) {
            const bool ok = mod_pow(static_cast<i64>(inst.x), m * t, inst.n) == 1;
            att.candidates.push_back({m * t, ok});
            if (ok) {
                att.recovered = m * t;
                return att;
            }
        }
    }
    return att;
}

u64 reduce_to_order(u64 candidate, u64 x, u64 n) {
    if (mod_pow(static_cast<i64>(x), candidate, n) != 1) {
        throw InvalidOrderError("candidate does not satisfy x^t == 1 mod n");
    }
    std::vector<u64> primes;
    u64 rest = candidate;
    for (u64 p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        primes.push_back(rest);
    }
    u64 t = candidate;
    for (u64 p : primes) {
        while (t % p == 0 && mod_pow(static_cast<i64>(x), t / p, n) == 1) {
            t /= p;
        }
    }
    return t;
}

OrderResult find_order(const ProblemInstance &inst, const OutcomeDistribution &dist,
                       std::size_t max_samples, u64 multiplier_bound, Rng &rng,
                       u64 seed_for_trace) {
    OrderResult res;
    res.trace.instance = inst;
    res.trace.seed = seed_for_trace;
    res.trace.max_samples = max_samples;
    res.trace.multiplier_bound = multiplier_bound;
    if (max_samples == 0) {
        return res;
    }
    const OutcomeSampler sampler(dist);
    for (std::size_t i = 1; i <= max_samples; ++i) {
        SampleAttempt att = examine_sample(inst, sampler.sample(rng), multiplier_bound);
        att.attempt = i;
        const std::optional<u64> found = att.recovered;
        res.trace.attempts.push_back(std::move(att));
        if (found) {
            const u64 order = reduce_to_order(*found, inst.x, inst.n);
            if (order != *found) {
                res.trace.reduced_from = *found;
            }
            res.order = order;
            res.trace.order = order;
            break;
        }
    }
    return res;
}

OrderResult find_order(const ProblemInstance &inst, std::size_t max_samples,
                       u64 multiplier_bound, u64 seed, const PipelineOptions &options) {
    PipelineOptions single = options;
    single.ell = 1;
    if (max_samples == 0) {
        OrderResult res;
        res.trace.instance = inst;
        res.trace.seed = seed;
        res.trace.multiplier_bound = multiplier_bound;
        return res;
    }
    const OutcomeDistribution dist = measurement_distribution(run_pipeline(inst, single));
    Rng rng(seed);
    return find_order(inst, dist, max_samples, multiplier_bound, rng, seed);
}

void check_factorable(u64 n) {
    if (n < 3) {
        throw UnsuitableInputError("unsuitable input: n must be at least 3");
    }
    if (n % 2 == 0) {
        throw UnsuitableInputError("unsuitable input: n = " + std::to_string(n) +
                                   " is even");
    }
    if (is_prime(n)) {
        throw UnsuitableInputError("unsuitable input: n = " + std::to_string(n) +
                                   " is prime");
    }
    if (const auto base = prime_power_base(n)) {
        throw UnsuitableInputError("unsuitable input: n = " + std::to_string(n) +
                                   " is a prime power of " + std::to_string(*base));
    }
}

FactorResult factor(u64 n, std::size_t max_attempts, u64 seed,
                    const FactorOptions &options) {
    check_factorable(n);
    // Fail on capacity before any randomness is consumed.
    PipelineOptions single = options.pipeline;
    single.ell = 1;
    (void)RegisterLayout::make(choose_modulus_power(n).s, bit_length(n - 1), 1,
                               single.qubit_cap);

    FactorResult res;
    res.trace.n = n;
    res.trace.seed = seed;
    res.trace.max_attempts = max_attempts;
    Rng rng(seed);
    std::map<u64, OutcomeDistribution> cache;

    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        FactorAttempt fa;
        fa.attempt = attempt;
        fa.x = 2 + uniform_below(rng, n - 2);
        const u64 g = gcd(fa.x, n);
        if (g != 1) {
            fa.shared_factor = g;
            fa.outcome = "gcd";
            res.factors = FactorPair{std::min(g, n / g), std::max(g, n / g)};
            res.trace.attempts.push_back(std::move(fa));
            break;
        }
        const ProblemInstance inst = ProblemInstance::make(n, fa.x);
        auto it = cache.find(fa.x);
        if (it == cache.end()) {
            it = cache.emplace(fa.x, measurement_distribution(run_pipeline(inst, single)))
                     .first;
        }
        OrderResult found = find_order(inst, it->second, options.max_samples_per_base,
                                       options.multiplier_bound, rng, seed);
        fa.order = found.order;
        fa.order_search = std::move(found.trace);
        if (!fa.order) {
            fa.outcome = "order not recovered";
        } else if (*fa.order % 2 != 0) {
            fa.outcome = "odd order";
        } else if (auto pair = factor_from_order(n, fa.x, *fa.order)) {
            fa.outcome = "factored";
            res.factors = *pair;
            res.trace.attempts.push_back(std::move(fa));
            break;
        } else {
            fa.outcome = "x^(r/2) = -1 mod n";
        }
        res.trace.attempts.push_back(std::move(fa));
    }
    res.trace.factors = res.factors;
    if (!res.factors) {
        res.trace.failure_reason =
            "no factor found within " + std::to_string(max_attempts) + " attempts";
    }
    return res;
}

SuccessRateReport success_rate_estimate(const ProblemInstance &inst, std::size_t trials,
                                        u64 multiplier_bound, u64 seed,
                                        const PipelineOptions &options) {
    PipelineOptions single = options;
    single.ell = 1;
    const OutcomeDistribution dist = measurement_distribution(run_pipeline(inst, single));

    SuccessRateReport rep;
    rep.r = multiplicative_order(inst.x, inst.n);
    rep.phi_r = euler_phi(rep.r);
    rep.trials = trials;
    const double rd = static_cast<double>(rep.r);
    rep.bound_joint = static_cast<double>(rep.phi_r) / (3.0 * rd);
    rep.bound_conditional = static_cast<double>(rep.phi_r) / (3.0 * rd * rd);

    std::unordered_map<u64, bool> succeeds;
    const auto yields_order = [&](const Outcome &o) {
        const auto it = succeeds.find(o[0]);
        if (it != succeeds.end()) {
            return it->second;
        }
        const SampleAttempt att = examine_sample(inst, o, multiplier_bound);
        const bool ok =
            att.recovered && reduce_to_order(*att.recovered, inst.x, inst.n) == rep.r;
        succeeds.emplace(o[0], ok);
        return ok;
    };

    for (const auto &e : dist.entries()) {
        if (yields_order(e.outcome)) {
            rep.exact_rate += e.probability;
        }
    }

    const OutcomeSampler sampler(dist);
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        if (yields_order(sampler.sample(rng))) {
            ++rep.successes;
        }
    }
    if (trials > 0) {
        const double t = static_cast<double>(trials);
        rep.empirical_rate = static_cast<double>(rep.successes) / t;
        rep.sigma = std::sqrt(rep.exact_rate * (1.0 - rep.exact_rate) / t);
        rep.within_three_sigma =
            std::abs(rep.empirical_rate - rep.exact_rate) <= 3.0 * rep.sigma + 1e-12;
    }
    return rep;
}

} // namespace shorsim
