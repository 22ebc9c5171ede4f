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

#include "shorsim/qft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shorsim/errors.hpp"

namespace shorsim {
namespace {

bool is_power_of_two(u64 v) { return v != 0 && (v & (v - 1)) == 0; }

u64 reverse_bits(u64 v, unsigned bits) {
    u64 out = 0;
    for (unsigned i = 0; i < bits; ++i) {
        out = (out << 1U) | ((v >> i) & 1U);
    }
    return out;
}

} // namespace

std::vector<cplx> twiddle_table(u64 q) {
    if (!is_power_of_two(q)) {
        throw RangeError("transform size must be a power of two");
    }
    std::vector<cplx> tw(q);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
    for (u64 j = 0; j < q; ++j) {
        tw[j] = std::polar(1.0, step * static_cast<double>(j));
    }
    return tw;
}

void dft_rows_direct(std::span<const cplx> in, std::span<cplx> out, u64 q,
                     std::size_t m) {
    if (in.size() != q * m || out.size() != q * m) {
        throw RangeError("dft block size mismatch");
    }
    const std::vector<cplx> tw = twiddle_table(q);
    const u64 mask = q - 1;
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    const kernels::KernelTable &k = kernels::active();

    std::fill(out.begin(), out.end(), cplx{});
    for (u64 a = 0; a < q; ++a) {
        const auto row = in.subspan(a * m, m);
        if (std::all_of(row.begin(), row.end(), [](cplx z) { return z == cplx{}; })) {
            continue;
        }
        for (u64 c = 0; c < q; ++c) {
            k.caxpy(norm * tw[(a * c) & mask], row, out.subspan(c * m, m));
        }
    }
}

void dft_sparse_column(std::span<const u64> positions, std::span<const cplx> values,
                       std::span<cplx> out, std::span<const cplx> twiddles) {
    const u64 q = twiddles.size();
    if (out.size() != q || positions.size() != values.size()) {
        throw RangeError("sparse dft size mismatch");
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    const kernels::KernelTable &k = kernels::active();
    for (u64 c = 0; c < q; ++c) {
        out[c] = norm * k.phase_dot(values, positions, c, twiddles);
    }
}

void qft_rows_gates(std::span<cplx> rows, unsigned s, std::size_t m) {
    const u64 q = u64{1} << s;
    if (rows.size() != q * m) {
        throw RangeError("gate qft block size mismatch");
    }
    const kernels::KernelTable &k = kernels::active();
    const double h = 1.0 / std::numbers::sqrt2;

    for (unsigned jj = s; jj-- > 0;) {
        const u64 half = u64{1} << jj;
        for (u64 base = 0; base < q; base += 2 * half) {
            k.butterfly(rows.subspan(base * m, half * m),
                        rows.subspan((base + half) * m, half * m), h);
        }
        for (unsigned kk = jj; kk-- > 0;) {
            const double angle =
                2.0 * std::numbers::pi / static_cast<double>(u64{1} << (jj - kk + 1));
            const cplx phase = std::polar(1.0, angle);
            const u64 run = u64{1} << kk;
            // Rows with bit kk set come in runs of 2^kk; keep those with bit jj set.
            for (u64 start = run; start < q; start += 2 * run) {
                if ((start & half) != 0) {
                    k.cscale(phase, rows.subspan(start * m, run * m));
                }
            }
        }
    }

    for (u64 a = 0; a < q; ++a) {
        const u64 b = reverse_bits(a, s);
        if (a < b) {
            std::swap_ranges(rows.begin() + static_cast<std::ptrdiff_t>(a * m),
                             rows.begin() + static_cast<std::ptrdiff_t>((a + 1) * m),
                             rows.begin() + static_cast<std::ptrdiff_t>(b * m));
        }
    }
}

} // namespace shorsim
