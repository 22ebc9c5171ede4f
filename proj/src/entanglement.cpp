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

#include "shorsim/entanglement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "shorsim/errors.hpp"

namespace shorsim {

SchmidtSpectrum schmidt_spectrum(const StateVector &state, unsigned cut_after,
                                 std::size_t dimension_cap) {
    const RegisterLayout &l = state.layout();
    if (cut_after < 1 || cut_after > l.ell()) {
        throw RangeError("cut must lie between register 1 and register ell+1");
    }
    const unsigned right_bits = (l.ell() - (cut_after - 1)) * l.width();
    const u64 right_mask = (u64{1} << right_bits) - 1;

    std::unordered_map<u64, Eigen::Index> rows;
    std::unordered_map<u64, Eigen::Index> cols;
    struct Triplet {
        Eigen::Index row;
        Eigen::Index col;
        cplx value;
    };
    std::vector<Triplet> entries;
    state.for_each_nonzero([&](u64 index, cplx amp) {
        const auto r = rows.try_emplace(index >> right_bits,
                                        static_cast<Eigen::Index>(rows.size()));
        const auto c = cols.try_emplace(index & right_mask,
                                        static_cast<Eigen::Index>(cols.size()));
        entries.push_back({r.first->second, c.first->second, amp});
    });

    SchmidtSpectrum out;
    out.cut_after = cut_after;
    if (entries.empty()) {
        return out;
    }
    const auto nr = static_cast<Eigen::Index>(rows.size());
    const auto nc = static_cast<Eigen::Index>(cols.size());
    if (static_cast<std::size_t>(std::min(nr, nc)) > dimension_cap) {
        throw CapacityError("Schmidt decomposition exceeds the dimension cap");
    }

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nr, nc);
    for (const Triplet &t : entries) {
        m(t.row, t.col) = t.value;
    }
    const Eigen::MatrixXcd gram = nr <= nc ? Eigen::MatrixXcd(m * m.adjoint())
                                           : Eigen::MatrixXcd(m.adjoint() * m);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram,
                                                                Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("eigenvalue solver did not converge");
    }
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double v = solver.eigenvalues()(i);
        if (v >= kEigenvalueFloor) {
            out.eigenvalues.push_back(std::min(v, 1.0));
        }
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    return out;
}

double von_neumann_entropy(const SchmidtSpectrum &spectrum) {
    double h = 0.0;
    for (double v : spectrum.eigenvalues) {
        if (v > 0.0) {
            h -= v * std::log2(v);
        }
    }
    return std::max(h, 0.0);
}

LocalityReport qft_locality_check(const ProblemInstance &inst,
                                  const PipelineOptions &options) {
    StateVector state = init_uniform(inst, options.ell, options.backend, options.qubit_cap);
    state = apply_modexp_fanout(std::move(state), inst);
    LocalityReport rep;
    rep.before = schmidt_spectrum(state, 1);
    state = apply_qft_register1(std::move(state), inst, options.qft);
    rep.after = schmidt_spectrum(state, 1);
    rep.entropy_before = von_neumann_entropy(rep.before);
    rep.entropy_after = von_neumann_entropy(rep.after);

    const std::size_t len = std::max(rep.before.eigenvalues.size(), rep.after.eigenvalues.size());
    for (std::size_t i = 0; i < len; ++i) {
        const double a = i < rep.before.eigenvalues.size() ? rep.before.eigenvalues[i] : 0.0;
        const double b = i < rep.after.eigenvalues.size() ? rep.after.eigenvalues[i] : 0.0;
        rep.max_deviation = std::max(rep.max_deviation, std::abs(a - b));
    }
    return rep;
}

CorrelationReport register_correlation(const OutcomeDistribution &dist, unsigned i,
                                       unsigned j) {
    if (i < 2 || j < 2 || i == j) {
        throw RangeError("correlation needs two distinct function registers");
    }
    const std::size_t si = dist.slot_of(i);
    const std::size_t sj = dist.slot_of(j);
    CorrelationReport rep;
    rep.i = i;
    rep.j = j;
    for (const auto &e : dist.entries()) {
        const u64 yi = e.outcome[si];
        const u64 yj = e.outcome[sj];
        rep.contingency[{yi, yj}] += e.probability;
        (yi == yj ? rep.p_equal : rep.p_unequal) += e.probability;
    }
    return rep;
}

} // namespace shorsim
