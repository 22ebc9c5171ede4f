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

#include "shorsim/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>

#include "shorsim/errors.hpp"

namespace shorsim {
namespace {

bool outcome_less(const OutcomeDistribution::Entry &e, const Outcome &o) {
    return e.outcome < o;
}

std::string column_name(unsigned position) {
    return position == 1 ? std::string("c") : "y" + std::to_string(position - 1);
}

} // namespace

OutcomeDistribution::OutcomeDistribution(RegisterLayout layout,
                                         std::vector<unsigned> positions,
                                         std::vector<Entry> entries)
    : layout_(layout), positions_(std::move(positions)), entries_(std::move(entries)) {
    if (positions_.empty()) {
        throw RangeError("a distribution needs at least one register");
    }
    if (!std::is_sorted(positions_.begin(), positions_.end()) ||
        std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
        throw RangeError("register positions must be strictly ascending");
    }
    if (positions_.back() > layout_.register_count()) {
        throw RangeError("register position outside the layout");
    }
    for (const Entry &e : entries_) {
        if (e.outcome.size() != positions_.size()) {
            throw RangeError("outcome arity does not match register list");
        }
        if (!(e.probability >= 0.0 && e.probability <= 1.0 + kNormTolerance)) {
            throw RangeError("probability outside [0, 1]");
        }
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry &a, const Entry &b) { return a.outcome < b.outcome; });
}

double OutcomeDistribution::probability(const Outcome &outcome) const {
    const auto it =
        std::lower_bound(entries_.begin(), entries_.end(), outcome, outcome_less);
    return it != entries_.end() && it->outcome == outcome ? it->probability : 0.0;
}

std::size_t OutcomeDistribution::slot_of(unsigned position) const {
    const auto it = std::find(positions_.begin(), positions_.end(), position);
    if (it == positions_.end()) {
        throw RangeError("register " + std::to_string(position) +
                         " not present in distribution");
    }
    return static_cast<std::size_t>(it - positions_.begin());
}

double OutcomeDistribution::event_probability(const Assignment &event) const {
    std::vector<std::pair<std::size_t, u64>> slots;
    for (const auto &[pos, value] : event) {
        slots.emplace_back(slot_of(pos), value);
    }
    double acc = 0.0;
    for (const Entry &e : entries_) {
        if (std::all_of(slots.begin(), slots.end(),
                        [&](const auto &sv) { return e.outcome[sv.first] == sv.second; })) {
            acc += e.probability;
        }
    }
    return acc;
}

double OutcomeDistribution::total() const {
    double acc = 0.0;
    for (const Entry &e : entries_) {
        acc += e.probability;
    }
    return acc;
}

OutcomeDistribution measurement_distribution(const StateVector &state) {
    const double norm = norm_squared(state);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw NormalizationError("state norm is " + std::to_string(norm));
    }
    const RegisterLayout &layout = state.layout();
    std::vector<OutcomeDistribution::Entry> entries;
    if (state.backend() == Backend::dense) {
        const auto data = state.dense_data();
        std::vector<double> probs(data.size());
        kernels::active().abs2(data, probs);
        for (u64 i = 0; i < probs.size(); ++i) {
            if (probs[i] > kProbabilityFloor) {
                entries.push_back({unpack_index(layout, i), probs[i]});
            }
        }
    } else {
        for (const auto &[i, amp] : state.sparse_data()) {
            const double p = std::norm(amp);
            if (p > kProbabilityFloor) {
                entries.push_back({unpack_index(layout, i), p});
            }
        }
    }
    std::vector<unsigned> positions(layout.register_count());
    for (unsigned p = 0; p < positions.size(); ++p) {
        positions[p] = p + 1;
    }
    return OutcomeDistribution(layout, std::move(positions), std::move(entries));
}

double analytic_eq1(const ProblemInstance &inst, u64 r, u64 c, u64 k) {
    if (r == 0 || k >= r) {
        throw RangeError("k must satisfy 0 <= k < r");
    }
    if (c >= inst.q) {
        throw RangeError("c must satisfy 0 <= c < q");
    }
    const u64 q = inst.q;
    const u64 terms = (q - k - 1) / r + 1;
    const u64 step = static_cast<u64>(static_cast<u128>(r) * c % q);
    const double qd = static_cast<double>(q);
    if (step == 0) {
        const double ratio = static_cast<double>(terms) / qd;
        return ratio * ratio;
    }
    const u64 total_turn = static_cast<u64>(static_cast<u128>(terms) * step % q);
    const double num = std::sin(std::numbers::pi * static_cast<double>(total_turn) / qd);
    const double den = std::sin(std::numbers::pi * static_cast<double>(step) / qd);
    const double amp = num / (den * qd);
    return amp * amp;
}

OutcomeDistribution marginal(const OutcomeDistribution &dist,
                             const std::vector<unsigned> &keep) {
    if (keep.empty()) {
        throw RangeError("marginal needs at least one register to keep");
    }
    std::vector<unsigned> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::vector<std::size_t> slots;
    for (unsigned pos : kept) {
        slots.push_back(dist.slot_of(pos));
    }
    std::map<Outcome, double> acc;
    for (const auto &e : dist.entries()) {
        Outcome reduced;
        reduced.reserve(slots.size());
        for (std::size_t s : slots) {
            reduced.push_back(e.outcome[s]);
        }
        acc[reduced] += e.probability;
    }
    std::vector<OutcomeDistribution::Entry> entries;
    entries.reserve(acc.size());
    for (auto &[o, p] : acc) {
        entries.push_back({o, std::min(p, 1.0)});
    }
    return OutcomeDistribution(dist.layout(), std::move(kept), std::move(entries));
}

OutcomeDistribution conditional(const OutcomeDistribution &dist, const Assignment &given) {
    std::vector<std::pair<std::size_t, u64>> slots;
    for (const auto &[pos, value] : given) {
        slots.emplace_back(dist.slot_of(pos), value);
    }
    std::vector<OutcomeDistribution::Entry> kept;
    double mass = 0.0;
    for (const auto &e : dist.entries()) {
        if (std::all_of(slots.begin(), slots.end(),
                        [&](const auto &sv) { return e.outcome[sv.first] == sv.second; })) {
            kept.push_back(e);
            mass += e.probability;
        }
    }
    if (!(mass > 0.0)) {
        throw ConditioningError("conditioning event has zero probability");
    }
    for (auto &e : kept) {
        e.probability = std::min(e.probability / mass, 1.0);
    }
    return OutcomeDistribution(dist.layout(), dist.positions(), std::move(kept));
}

i64 signed_residue(i64 v, u64 q) {
    if (q < 2) {
        throw RangeError("signed_residue requires q >= 2");
    }
    const i64 sq = static_cast<i64>(q);
    i64 m = ((v % sq) + sq) % sq;
    if (2 * m > sq) {
        m -= sq;
    }
    return m;
}

BoundReport shor_bound_report(const ProblemInstance &inst) {
    BoundReport rep;
    rep.n = inst.n;
    rep.x = inst.x;
    rep.q = inst.q;
    rep.r = multiplicative_order(inst.x, inst.n);
    rep.phi_r = euler_phi(rep.r);
    const double rd = static_cast<double>(rep.r);
    rep.strong_bound = 4.0 / (std::numbers::pi * std::numbers::pi * rd * rd);
    rep.weak_bound = 1.0 / (3.0 * rd * rd);
    rep.success_bound_joint = static_cast<double>(rep.phi_r) / (3.0 * rd);
    rep.success_bound_conditional = static_cast<double>(rep.phi_r) / (3.0 * rd * rd);
    rep.min_margin_strong = std::numeric_limits<double>::infinity();
    rep.min_margin_weak = std::numeric_limits<double>::infinity();

    const u64 q = inst.q;
    const u64 r = rep.r;
    for (u64 c = 0; c < q; ++c) {
        const u64 rc = r * c;
        const i64 residue = signed_residue(static_cast<i64>(rc), q);
        if (2 * static_cast<u64>(std::llabs(residue)) > r) {
            continue;
        }
        BoundRow row;
        row.c = c;
        row.d = (2 * rc + q) / (2 * q);
        row.residue = residue;
        row.gcd_dr = gcd(row.d, r);
        row.probabilities.resize(r);
        row.min_probability = std::numeric_limits<double>::infinity();
        for (u64 k = 0; k < r; ++k) {
            const double p = analytic_eq1(inst, r, c, k);
            row.probabilities[k] = p;
            row.min_probability = std::min(row.min_probability, p);
            if (row.gcd_dr == 1) {
                rep.success_mass += p;
            }
        }
        row.clears_weak_bound = row.min_probability > rep.weak_bound;
        if (!row.clears_weak_bound) {
            ++rep.below_weak_count;
        }
        rep.min_margin_strong =
            std::min(rep.min_margin_strong, row.min_probability - rep.strong_bound);
        rep.min_margin_weak =
            std::min(rep.min_margin_weak, row.min_probability - rep.weak_bound);
        rep.rows.push_back(std::move(row));
    }
    rep.good_count = rep.rows.size();
    return rep;
}

AuditReport contradiction_audit(const ProblemInstance &inst, unsigned ell,
                                const PipelineOptions &base) {
    if (ell < 2) {
        throw RangeError("the audit needs at least two function registers");
    }
    PipelineOptions one = base;
    one.ell = 1;
    PipelineOptions many = base;
    many.ell = ell;
    const OutcomeDistribution single = measurement_distribution(run_pipeline(inst, one));
    const OutcomeDistribution multi = measurement_distribution(run_pipeline(inst, many));
    return contradiction_audit(inst, single, multi);
}

AuditReport contradiction_audit(const ProblemInstance &inst,
                                const OutcomeDistribution &single,
                                const OutcomeDistribution &multi) {
    const unsigned ell = multi.layout().ell();
    if (single.layout().ell() != 1 || ell < 2) {
        throw RangeError("audit needs an ell = 1 and an ell >= 2 distribution");
    }
    AuditReport rep;
    rep.n = inst.n;
    rep.x = inst.x;
    rep.ell = ell;
    rep.r = multiplicative_order(inst.x, inst.n);

    std::vector<u64> powers(rep.r);
    for (u64 k = 0; k < rep.r; ++k) {
        powers[k] = mod_pow(static_cast<i64>(inst.x), k, inst.n);
    }

    Outcome one(2);
    Outcome all(ell + 1);
    for (u64 c = 0; c < inst.q; ++c) {
        for (u64 k = 0; k < rep.r; ++k) {
            one = {c, powers[k]};
            all.assign(ell + 1, powers[k]);
            all[0] = c;
            rep.eq2_discrepancy = std::max(
                rep.eq2_discrepancy, std::abs(multi.probability(all) - single.probability(one)));
        }
    }

    for (const auto &e : multi.entries()) {
        const bool equal = std::all_of(e.outcome.begin() + 1, e.outcome.end(),
                                       [&](u64 y) { return y == e.outcome[1]; });
        if (!equal) {
            rep.unequal_mass += e.probability;
        }
    }

    // Likeliest single-register outcome; ties go to the smallest (c, y).
    const auto best = std::max_element(
        single.entries().begin(), single.entries().end(),
        [](const auto &a, const auto &b) { return a.probability < b.probability; });
    if (best != single.entries().end()) {
        rep.sample_c = best->outcome[0];
        const u64 y = best->outcome[1];
        rep.sample_k = static_cast<u64>(
            std::find(powers.begin(), powers.end(), y) - powers.begin());
        rep.joint = best->probability;
        rep.conditional_on_y = rep.joint / single.event_probability({{2, y}});
        const OutcomeDistribution given = conditional(multi, {{1, rep.sample_c}, {2, y}});
        rep.same_given_xy = given.event_probability({{3, y}});
        for (u64 l = 0; l < rep.r; ++l) {
            if (powers[l] != y) {
                rep.max_different_given_xy = std::max(
                    rep.max_different_given_xy, given.event_probability({{3, powers[l]}}));
            }
        }
    }

    rep.eq2_supported = rep.eq2_discrepancy <= kNormTolerance;
    rep.eq3_premise_supported = rep.unequal_mass > kNormTolerance;
    rep.verdict = std::string("joint probability with equal function registers ") +
                  (rep.eq2_supported ? "matches" : "does not match") +
                  " the single-register joint probability; probability of unequal "
                  "function registers is " +
                  (rep.eq3_premise_supported ? "nonzero, so registers behave as independent"
                                             : "zero, so registers are perfectly correlated") +
                  ".";
    return rep;
}

double total_variation(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    if (a.positions() != b.positions()) {
        throw RangeError("distributions cover different registers");
    }
    double acc = 0.0;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() ||
            (ia != a.entries().end() && ia->outcome < ib->outcome)) {
            acc += ia->probability;
            ++ia;
        } else if (ia == a.entries().end() || ib->outcome < ia->outcome) {
            acc += ib->probability;
            ++ib;
        } else {
            acc += std::abs(ia->probability - ib->probability);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * acc;
}

void write_csv(std::ostream &out, const OutcomeDistribution &dist) {
    for (unsigned pos : dist.positions()) {
        out << column_name(pos) << ',';
    }
    out << "probability\n";
    char buf[40];
    for (const auto &e : dist.entries()) {
        for (u64 v : e.outcome) {
            out << v << ',';
        }
        std::snprintf(buf, sizeof(buf), "%.17g", e.probability);
        out << buf << '\n';
    }
}

} // namespace shorsim
