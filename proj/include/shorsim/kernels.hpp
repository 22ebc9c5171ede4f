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
 * Data-parallel inner loops over complex amplitudes.
 *
 * Every kernel has a scalar reference implementation. On x86-64 an AVX2+FMA
 * variant is compiled in its own translation unit and selected at runtime
 * when the CPU reports support. Both variants are exposed so tests can check
 * them against each other.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace shorsim {

using cplx = std::complex<double>;

namespace kernels {

/// Function table for one instruction-set variant.
struct KernelTable {
    std::string_view name;

    /// Sum of |v_i|^2.
    double (*norm_squared)(std::span<const cplx> v);

    /// out_i = |v_i|^2; spans have equal length.
    void (*abs2)(std::span<const cplx> v, std::span<double> out);

    /// y += alpha * x; spans have equal length.
    void (*caxpy)(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

    /// Sum over i of values_i * twiddles[(positions_i * c) & (twiddles.size() - 1)].
    /// twiddles.size() is a power of two.
    cplx (*phase_dot)(std::span<const cplx> values,
                      std::span<const std::uint64_t> positions, std::uint64_t c,
                      std::span<const cplx> twiddles);

    /// (lo, hi) <- (scale * (lo + hi), scale * (lo - hi)) elementwise.
    void (*butterfly)(std::span<cplx> lo, std::span<cplx> hi, double scale);

    /// v *= alpha.
    void (*cscale)(cplx alpha, std::span<cplx> v);
};

[[nodiscard]] const KernelTable &scalar();

/// AVX2 table, or nullptr when not compiled in or unsupported by this CPU.
[[nodiscard]] const KernelTable *avx2();

/// Table used by the library; AVX2 when available unless forced to scalar.
[[nodiscard]] const KernelTable &active();

/// Pins active() to the scalar table (true) or back to auto-detect (false).
void force_scalar(bool on);

} // namespace kernels
} // namespace shorsim
