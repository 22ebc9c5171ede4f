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
 * Discrete Fourier transform on register-1, in two independent forms.
 *
 * Both operate on a row-major q x m block: row a holds the m amplitudes that
 * share register-1 value a. The forward transform uses the positive phase
 *
 *     out[c] = q^{-1/2} * sum_a exp(2*pi*i*a*c/q) * in[a].
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shorsim/kernels.hpp"
#include "shorsim/numtheory.hpp"

namespace shorsim {

/// tw[j] = exp(2*pi*i*j/q) for j in [0, q). q must be a power of two.
[[nodiscard]] std::vector<cplx> twiddle_table(u64 q);

/// Matrix form: out = F * in with F[c][a] = q^{-1/2} exp(2*pi*i*a*c/q).
/// `in` and `out` must not alias; both hold q * m entries.
void dft_rows_direct(std::span<const cplx> in, std::span<cplx> out, u64 q,
                     std::size_t m);

/// Single column over a sparse support: out[c] for every c in [0, q).
void dft_sparse_column(std::span<const u64> positions, std::span<const cplx> values,
                       std::span<cplx> out, std::span<const cplx> twiddles);

/**
 * Circuit form, in place: for each qubit j from most to least significant,
 * a Hadamard on j followed by controlled phases exp(2*pi*i / 2^(j-k+1)) for
 * every lower qubit k; then a qubit-order reversal. s*(s-1)/2 phases total.
 */
void qft_rows_gates(std::span<cplx> rows, unsigned s, std::size_t m);

} // namespace shorsim
