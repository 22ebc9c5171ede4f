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

#include "shorsim/report_json.hpp"

#include <algorithm>
#include <cmath>

namespace shorsim {

using nlohmann::json;

namespace {

// Infinite margins (no rows) become null rather than invalid JSON.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string register_name(unsigned position) {
    return position == 1 ? std::string("c") : "y" + std::to_string(position - 1);
}

} // namespace

json to_json(const ProblemInstance &inst) {
    return {{"n", inst.n}, {"x", inst.x}, {"q", inst.q}, {"s", inst.s}};
}

json to_json(const Rational &r) { return {r.numerator, r.denominator}; }

json to_json(const FactorPair &f) { return {f.f1, f.f2}; }

json to_json(const BoundReport &rep) {
    json rows = json::array();
    for (const BoundRow &row : rep.rows) {
        rows.push_back({{"c", row.c},
                        {"d", row.d},
                        {"residue", row.residue},
                        {"gcd_d_r", row.gcd_dr},
                        {"probabilities", row.probabilities},
                        {"min_probability", row.min_probability},
                        {"clears_weak_bound", row.clears_weak_bound}});
    }
    return {{"n", rep.n},
            {"x", rep.x},
            {"q", rep.q},
            {"r", rep.r},
            {"phi_r", rep.phi_r},
            {"strong_bound", rep.strong_bound},
            {"weak_bound", rep.weak_bound},
            {"good_count", rep.good_count},
            {"below_weak_count", rep.below_weak_count},
            {"min_margin_strong", finite_or_null(rep.min_margin_strong)},
            {"min_margin_weak", finite_or_null(rep.min_margin_weak)},
            {"success_mass", rep.success_mass},
            {"success_bound_joint", rep.success_bound_joint},
            {"success_bound_conditional", rep.success_bound_conditional},
            {"all_clear", rep.all_clear()},
            {"rows", rows}};
}

json to_json(const AuditReport &rep) {
    return {{"n", rep.n},
            {"x", rep.x},
            {"r", rep.r},
            {"ell", rep.ell},
            {"eq2_discrepancy", rep.eq2_discrepancy},
            {"unequal_mass", rep.unequal_mass},
            {"eq2_supported", rep.eq2_supported},
            {"eq3_premise_supported", rep.eq3_premise_supported},
            {"interpretations",
             {{"c", rep.sample_c},
              {"k", rep.sample_k},
              {"joint", rep.joint},
              {"conditional_on_y", rep.conditional_on_y},
              {"same_given_xy", rep.same_given_xy},
              {"max_different_given_xy", rep.max_different_given_xy}}},
            {"passes", rep.passes()},
            {"verdict", rep.verdict}};
}

json to_json(const SchmidtSpectrum &spec) {
    return {{"cut_after", spec.cut_after},
            {"eigenvalues", spec.eigenvalues},
            {"schmidt_rank", spec.eigenvalues.size()},
            {"entropy_bits", von_neumann_entropy(spec)}};
}

json to_json(const LocalityReport &rep) {
    return {{"before", to_json(rep.before)},
            {"after", to_json(rep.after)},
            {"entropy_before", rep.entropy_before},
            {"entropy_after", rep.entropy_after},
            {"max_deviation", rep.max_deviation}};
}

json to_json(const CorrelationReport &rep) {
    json table = json::array();
    for (const auto &[key, p] : rep.contingency) {
        table.push_back({{"yi", key.first}, {"yj", key.second}, {"probability", p}});
    }
    return {{"i", rep.i},
            {"j", rep.j},
            {"p_equal", rep.p_equal},
            {"p_unequal", rep.p_unequal},
            {"contingency", table}};
}

json to_json(const LinearityReport &rep) {
    return {{"sample_size", rep.sample_size},
            {"max_discrepancy", rep.max_discrepancy},
            {"within_tolerance", rep.within_tolerance}};
}

json to_json(const SampleAttempt &att) {
    json convs = json::array();
    for (const Rational &r : att.convergents) {
        convs.push_back(to_json(r));
    }
    json cands = json::array();
    for (const CandidateCheck &c : att.candidates) {
        cands.push_back({{"candidate", c.candidate}, {"verified", c.verified}});
    }
    return {{"attempt", att.attempt},
            {"outcome", att.outcome},
            {"convergents", convs},
            {"candidates", cands},
            {"recovered", att.recovered ? json(*att.recovered) : json(nullptr)}};
}

json to_json(const OrderTrace &trace) {
    json attempts = json::array();
    for (const SampleAttempt &att : trace.attempts) {
        attempts.push_back(to_json(att));
    }
    return {{"instance", to_json(trace.instance)},
            {"seed", trace.seed},
            {"max_samples", trace.max_samples},
            {"multiplier_bound", trace.multiplier_bound},
            {"samples", attempts},
            {"order", trace.order ? json(*trace.order) : json(nullptr)},
            {"reduced_from", trace.reduced_from ? json(*trace.reduced_from) : json(nullptr)}};
}

json to_json(const FactorTrace &trace) {
    json attempts = json::array();
    for (const FactorAttempt &fa : trace.attempts) {
        attempts.push_back(
            {{"attempt", fa.attempt},
             {"x", fa.x},
             {"shared_factor", fa.shared_factor ? json(*fa.shared_factor) : json(nullptr)},
             {"order", fa.order ? json(*fa.order) : json(nullptr)},
             {"order_search", fa.order_search ? to_json(*fa.order_search) : json(nullptr)},
             {"outcome", fa.outcome}});
    }
    return {{"n", trace.n},
            {"seed", trace.seed},
            {"max_attempts", trace.max_attempts},
            {"attempts", attempts},
            {"factors", trace.factors ? to_json(*trace.factors) : json(nullptr)},
            {"failure_reason", trace.failure_reason}};
}

json to_json(const SuccessRateReport &rep) {
    return {{"r", rep.r},
            {"phi_r", rep.phi_r},
            {"trials", rep.trials},
            {"successes", rep.successes},
            {"empirical_rate", rep.empirical_rate},
            {"exact_rate", rep.exact_rate},
            {"sigma", rep.sigma},
            {"within_three_sigma", rep.within_three_sigma},
            {"bound_joint", rep.bound_joint},
            {"bound_conditional", rep.bound_conditional}};
}

json distribution_summary(const OutcomeDistribution &dist, std::size_t top) {
    std::vector<const OutcomeDistribution::Entry *> order;
    order.reserve(dist.size());
    for (const auto &e : dist.entries()) {
        order.push_back(&e);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto *a, const auto *b) {
        return a->probability > b->probability;
    });
    json top_json = json::array();
    for (std::size_t i = 0; i < std::min(top, order.size()); ++i) {
        top_json.push_back({{"outcome", order[i]->outcome},
                            {"probability", order[i]->probability}});
    }
    json marginals = json::object();
    for (unsigned pos : dist.positions()) {
        json values = json::array();
        const OutcomeDistribution m = marginal(dist, {pos});
        for (const auto &e : m.entries()) {
            values.push_back({{"value", e.outcome[0]}, {"probability", e.probability}});
        }
        marginals[register_name(pos)] = values;
    }
    return {{"outcome_count", dist.size()},
            {"total_probability", dist.total()},
            {"top_outcomes", top_json},
            {"marginals", marginals}};
}

} // namespace shorsim
