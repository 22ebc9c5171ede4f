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
 * Exact measurement statistics over (c, y_1, ..., y_ell) outcomes, the
 * closed-form single-outcome probability, the lower-bound report and the
 * multi-register consistency audit.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "shorsim/pipeline.hpp"
#include "shorsim/registers.hpp"

namespace shorsim {

/// Probabilities at or below this are reported as exact zeros.
inline constexpr double kProbabilityFloor = 1e-20;

/// (register position, value) pairs; position 1 is register-1.
using Assignment = std::vector<std::pair<unsigned, u64>>;

/**
 * Probability table over joint register values.
 *
 * `positions` names which registers of the source layout are present
 * (1-based, ascending). Entries are sorted lexicographically by outcome,
 * which for a full distribution equals ascending packed index.
 */
class OutcomeDistribution {
  public:
    struct Entry {
        Outcome outcome;
        double probability;
    };

    OutcomeDistribution(RegisterLayout layout, std::vector<unsigned> positions,
                        std::vector<Entry> entries);

    [[nodiscard]] const RegisterLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] const std::vector<unsigned> &positions() const noexcept {
        return positions_;
    }
    [[nodiscard]] const std::vector<Entry> &entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

    /// Probability of an exact outcome (0 when absent).
    [[nodiscard]] double probability(const Outcome &outcome) const;
    /// Total probability of entries matching every (position, value) pair.
    [[nodiscard]] double event_probability(const Assignment &event) const;
    [[nodiscard]] double total() const;
    /// Slot of a register position within an outcome; throws RangeError if absent.
    [[nodiscard]] std::size_t slot_of(unsigned position) const;

  private:
    RegisterLayout layout_;
    std::vector<unsigned> positions_;
    std::vector<Entry> entries_;
};

/// Squared magnitudes of the state's amplitudes. Throws NormalizationError
/// when the norm is off by more than kNormTolerance.
[[nodiscard]] OutcomeDistribution measurement_distribution(const StateVector &state);

/**
 * |q^{-1} sum_{b=0}^{floor((q-k-1)/r)} exp(2 pi i (b r + k) c / q)|^2 via the
 * closed-form geometric ratio sin^2(pi M t / q) / sin^2(pi t / q) with
 * t = r c mod q, or (M/q)^2 when t == 0.
 */
[[nodiscard]] double analytic_eq1(const ProblemInstance &inst, u64 r, u64 c, u64 k);

[[nodiscard]] OutcomeDistribution marginal(const OutcomeDistribution &dist,
                                           const std::vector<unsigned> &keep);

/// Restriction to `given`, renormalized. Throws ConditioningError when the
/// event has zero probability.
[[nodiscard]] OutcomeDistribution conditional(const OutcomeDistribution &dist,
                                              const Assignment &given);

/// Representative of v mod q in (-q/2, q/2].
[[nodiscard]] i64 signed_residue(i64 v, u64 q);

/// One control value with |{rc}_q| <= r/2.
struct BoundRow {
    u64 c{0};
    u64 d{0};
    i64 residue{0};
    u64 gcd_dr{0};
    std::vector<double> probabilities; ///< indexed by k in [0, r)
    double min_probability{0.0};
    bool clears_weak_bound{false};     ///< min_probability > 1/(3 r^2)
};

struct BoundReport {
    u64 n{0};
    u64 x{0};
    u64 q{0};
    u64 r{0};
    u64 phi_r{0};
    double strong_bound{0.0}; ///< 4 / (pi^2 r^2)
    double weak_bound{0.0};   ///< 1 / (3 r^2)
    std::vector<BoundRow> rows;
    std::size_t good_count{0};
    std::size_t below_weak_count{0};
    double min_margin_strong{0.0}; ///< min over rows/k of p - strong_bound
    double min_margin_weak{0.0};
    double success_mass{0.0};      ///< mass on good c with gcd(d, r) == 1, all k
    double success_bound_joint{0.0};       ///< phi(r) / (3 r)
    double success_bound_conditional{0.0}; ///< phi(r) / (3 r^2)

    [[nodiscard]] bool all_clear() const noexcept { return below_weak_count == 0; }
};

[[nodiscard]] BoundReport shor_bound_report(const ProblemInstance &inst);

struct AuditReport {
    u64 n{0};
    u64 x{0};
    u64 r{0};
    unsigned ell{0};
    double eq2_discrepancy{0.0};
    double unequal_mass{0.0};
    bool eq2_supported{false};
    bool eq3_premise_supported{false};

    // Joint vs conditional readings at the likeliest outcome (c, x^k).
    u64 sample_c{0};
    u64 sample_k{0};
    double joint{0.0};                 ///< P(X=c, Y=x^k)
    double conditional_on_y{0.0};      ///< P(X=c | Y=x^k)
    double same_given_xy{0.0};         ///< P(Z=x^k | X=c, Y=x^k)
    double max_different_given_xy{0.0};///< max over l != k of P(Z=x^l | X=c, Y=x^k)

    std::string verdict;

    [[nodiscard]] bool passes() const noexcept {
        return eq2_discrepancy <= kNormTolerance && unequal_mass <= kNormTolerance;
    }
};

/// Runs the pipeline at ell = 1 and at `ell` (>= 2) and compares them.
[[nodiscard]] AuditReport contradiction_audit(const ProblemInstance &inst, unsigned ell,
                                              const PipelineOptions &base = {});

/// Same audit reusing already-built distributions (ell = 1 and ell >= 2).
[[nodiscard]] AuditReport contradiction_audit(const ProblemInstance &inst,
                                              const OutcomeDistribution &single,
                                              const OutcomeDistribution &multi);

/// Total-variation distance between two distributions over the same registers.
[[nodiscard]] double total_variation(const OutcomeDistribution &a,
                                     const OutcomeDistribution &b);

/// CSV with header c,y1,...,probability (17 significant digits).
void write_csv(std::ostream &out, const OutcomeDistribution &dist);

} // namespace shorsim
