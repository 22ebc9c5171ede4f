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

#include "shorsim/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "shorsim/errors.hpp"
#include "shorsim/qft.hpp"

namespace shorsim {
namespace {

void check_instance_layout(const StateVector &state, const ProblemInstance &inst) {
    const RegisterLayout &l = state.layout();
    if (l.register1_size() != inst.q) {
        throw RangeError("state register-1 size does not match q");
    }
    if (bit_length(inst.n - 1) > l.width()) {
        throw RangeError("function registers too narrow for residues mod n");
    }
}

void check_norm(const StateVector &state, std::string_view stage) {
    const double norm = norm_squared(state);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw NormalizationError("norm drifted to " + std::to_string(norm) +
                                 " after " + std::string(stage));
    }
}

// Groups a sparse state's amplitudes by function-register content.
struct Column {
    std::vector<u64> positions;
    std::vector<cplx> values;
};

std::map<u64, Column> group_columns(const StateVector &state) {
    const unsigned fb = state.layout().function_bits();
    const u64 mask = state.layout().function_space() - 1;
    std::map<u64, Column> groups;
    for (const auto &[index, amp] : state.sparse_data()) {
        Column &col = groups[index & mask];
        col.positions.push_back(index >> fb);
        col.values.push_back(amp);
    }
    return groups;
}

// Dense columns that carry any nonzero amplitude.
std::vector<u64> active_columns(std::span<const cplx> data, u64 rows, u64 width) {
    std::vector<char> seen(width, 0);
    for (u64 a = 0; a < rows; ++a) {
        const cplx *row = data.data() + a * width;
        for (u64 y = 0; y < width; ++y) {
            if (row[y] != cplx{}) {
                seen[y] = 1;
            }
        }
    }
    std::vector<u64> cols;
    for (u64 y = 0; y < width; ++y) {
        if (seen[y] != 0) {
            cols.push_back(y);
        }
    }
    return cols;
}

template <class Transform>
StateVector transform_dense(StateVector state, Transform &&transform) {
    const RegisterLayout &l = state.layout();
    const u64 q = l.register1_size();
    const u64 width = l.function_space();
    auto data = state.dense_data();
    // Columns that are entirely zero stay zero; transform only the rest.
    const std::vector<u64> cols = active_columns(data, q, width);
    const std::size_t m = cols.size();
    if (m == 0) {
        return state;
    }
    std::vector<cplx> block(q * m);
    for (u64 a = 0; a < q; ++a) {
        for (std::size_t j = 0; j < m; ++j) {
            block[a * m + j] = data[a * width + cols[j]];
        }
    }
    transform(block, q, m);
    for (u64 c = 0; c < q; ++c) {
        for (std::size_t j = 0; j < m; ++j) {
            data[c * width + cols[j]] = block[c * m + j];
        }
    }
    return state;
}

void store_column(std::map<u64, cplx> &out, std::span<const cplx> column,
                  u64 y, unsigned fb) {
    for (u64 c = 0; c < column.size(); ++c) {
        if (std::abs(column[c]) > kSparseDropThreshold) {
            out.emplace((c << fb) | y, column[c]);
        }
    }
}

} // namespace

std::string_view to_string(QftMethod m) {
    return m == QftMethod::direct ? "direct" : "gates";
}

QftMethod qft_method_from_string(std::string_view name) {
    if (name == "direct") {
        return QftMethod::direct;
    }
    if (name == "gates") {
        return QftMethod::gates;
    }
    throw RangeError("unknown qft method '" + std::string(name) + "'");
}

StateVector init_uniform(const ProblemInstance &inst, unsigned ell, Backend backend,
                         unsigned qubit_cap) {
    const RegisterLayout layout = RegisterLayout::for_instance(inst, ell, qubit_cap);
    StateVector state(layout, backend);
    const cplx amp(1.0 / std::sqrt(static_cast<double>(inst.q)), 0.0);
    const unsigned fb = layout.function_bits();
    if (backend == Backend::dense) {
        auto data = state.dense_data();
        for (u64 a = 0; a < inst.q; ++a) {
            data[a << fb] = amp;
        }
    } else {
        auto &map = state.sparse_data();
        for (u64 a = 0; a < inst.q; ++a) {
            map.emplace_hint(map.end(), a << fb, amp);
        }
    }
    return state;
}

StateVector apply_modexp_fanout(StateVector state, const ProblemInstance &inst) {
    check_instance_layout(state, inst);
    const RegisterLayout &l = state.layout();
    const unsigned fb = l.function_bits();
    const u64 fmask = l.function_space() - 1;

    // x^a mod n for every a, by running products.
    std::vector<u64> powers(inst.q);
    u64 p = 1;
    for (u64 a = 0; a < inst.q; ++a) {
        powers[a] = p;
        p = mul_mod(p, inst.x, inst.n);
    }
    const auto target = [&](u64 a) {
        u64 idx = a;
        for (unsigned i = 0; i < l.ell(); ++i) {
            idx = (idx << l.width()) | powers[a];
        }
        return idx;
    };

    if (state.backend() == Backend::dense) {
        auto data = state.dense_data();
        for (u64 i = 0; i < data.size(); ++i) {
            if (data[i] != cplx{} && (i & fmask) != 0) {
                throw StageOrderError("fan-out requires cleared function registers");
            }
        }
        for (u64 a = 0; a < inst.q; ++a) {
            const u64 from = a << fb;
            const u64 to = target(a);
            if (from != to) {
                data[to] = data[from];
                data[from] = cplx{};
            }
        }
        return state;
    }

    std::map<u64, cplx> moved;
    for (const auto &[index, amp] : state.sparse_data()) {
        if ((index & fmask) != 0) {
            throw StageOrderError("fan-out requires cleared function registers");
        }
        moved.emplace(target(index >> fb), amp);
    }
    state.sparse_data() = std::move(moved);
    return state;
}

StateVector apply_qft_register1_direct(StateVector state, const ProblemInstance &inst) {
    check_instance_layout(state, inst);
    if (state.backend() == Backend::dense) {
        return transform_dense(std::move(state), [](std::vector<cplx> &block, u64 q,
                                                     std::size_t m) {
            std::vector<cplx> out(block.size());
            dft_rows_direct(block, out, q, m);
            block.swap(out);
        });
    }
    const unsigned fb = state.layout().function_bits();
    const std::vector<cplx> tw = twiddle_table(inst.q);
    std::vector<cplx> column(inst.q);
    std::map<u64, cplx> out;
    for (const auto &[y, col] : group_columns(state)) {
        dft_sparse_column(col.positions, col.values, column, tw);
        store_column(out, column, y, fb);
    }
    state.sparse_data() = std::move(out);
    return state;
}

StateVector apply_qft_register1_gates(StateVector state, const ProblemInstance &inst) {
    check_instance_layout(state, inst);
    const unsigned s = inst.s;
    if (state.backend() == Backend::dense) {
        const u64 width = state.layout().function_space();
        qft_rows_gates(state.dense_data(), s, width);
        return state;
    }
    const unsigned fb = state.layout().function_bits();
    std::vector<cplx> column(inst.q);
    std::map<u64, cplx> out;
    for (const auto &[y, col] : group_columns(state)) {
        std::fill(column.begin(), column.end(), cplx{});
        for (std::size_t i = 0; i < col.positions.size(); ++i) {
            column[col.positions[i]] = col.values[i];
        }
        qft_rows_gates(column, s, 1);
        store_column(out, column, y, fb);
    }
    state.sparse_data() = std::move(out);
    return state;
}

StateVector apply_qft_register1(StateVector state, const ProblemInstance &inst,
                                QftMethod method) {
    return method == QftMethod::direct
               ? apply_qft_register1_direct(std::move(state), inst)
               : apply_qft_register1_gates(std::move(state), inst);
}

StateVector run_pipeline(const ProblemInstance &inst, const PipelineOptions &options) {
    StateVector state = init_uniform(inst, options.ell, options.backend, options.qubit_cap);
    check_norm(state, "initialization");
    state = apply_modexp_fanout(std::move(state), inst);
    check_norm(state, "fan-out");
    state = apply_qft_register1(std::move(state), inst, options.qft);
    check_norm(state, "fourier transform");
    return state;
}

LinearityReport linearity_check(const ProblemInstance &inst,
                                std::span<const u64> sample_as, Backend backend,
                                unsigned ell) {
    std::vector<u64> as(sample_as.begin(), sample_as.end());
    std::sort(as.begin(), as.end());
    as.erase(std::unique(as.begin(), as.end()), as.end());
    if (!as.empty() && as.back() >= inst.q) {
        throw RangeError("sample value outside [0, q)");
    }
    LinearityReport report;
    report.sample_size = as.size();
    if (as.empty()) {
        report.within_tolerance = true;
        return report;
    }

    const RegisterLayout layout = RegisterLayout::for_instance(inst, ell);
    const unsigned fb = layout.function_bits();
    const cplx amp(1.0 / std::sqrt(static_cast<double>(as.size())), 0.0);

    StateVector superposed(layout, backend);
    for (u64 a : as) {
        superposed.set_amplitude(a << fb, amp);
    }
    superposed = apply_modexp_fanout(std::move(superposed), inst);

    StateVector assembled(layout, Backend::sparse);
    for (u64 a : as) {
        StateVector basis(layout, Backend::sparse);
        basis.set_amplitude(a << fb, cplx(1.0, 0.0));
        basis = apply_modexp_fanout(std::move(basis), inst);
        basis.for_each_nonzero([&](u64 i, cplx v) {
            assembled.set_amplitude(i, assembled.amplitude(i) + amp * v);
        });
    }

    report.max_discrepancy = max_amplitude_deviation(superposed, assembled);
    report.within_tolerance = report.max_discrepancy <= kNormTolerance;
    return report;
}

} // namespace shorsim
