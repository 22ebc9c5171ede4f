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

// Compiled with -mavx2 -mfma; only reached through dispatch after a CPU check.

#include <immintrin.h>

#include <cstddef>

#include "variants.hpp"

namespace shorsim::kernels::detail {
namespace {

inline const double *raw(const cplx *p) {
    return reinterpret_cast<const double *>(p);
}
inline double *raw(cplx *p) { return reinterpret_cast<double *>(p); }

// alpha * [z0, z1] for a broadcast complex alpha = (ar, ai).
inline __m256d mul_const(__m256d ar, __m256d ai, __m256d z) {
    const __m256d swapped = _mm256_permute_pd(z, 0b0101);
    return _mm256_fmaddsub_pd(ar, z, _mm256_mul_pd(ai, swapped));
}

// Elementwise complex product [a0*b0, a1*b1].
inline __m256d mul_pair(__m256d a, __m256d b) {
    const __m256d are = _mm256_movedup_pd(a);
    const __m256d aim = _mm256_permute_pd(a, 0b1111);
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bswap));
}

double norm_squared(std::span<const cplx> v) {
    const std::size_t n = v.size();
    const double *p = raw(v.data());
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    for (; i + 2 <= n; i += 2) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        total += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
    }
    return total;
}

void abs2(std::span<const cplx> v, std::span<double> out) {
    const std::size_t n = v.size();
    const double *p = raw(v.data());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
        // hadd interleaves the pairs as [z0, z2, z1, z3].
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        _mm256_storeu_pd(out.data() + i, _mm256_permute4x64_pd(h, 0b11011000));
    }
    for (; i < n; ++i) {
        out[i] = v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
    }
}

void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    const std::size_t n = x.size();
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double *px = raw(x.data());
    double *py = raw(y.data());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(px + 2 * i);
        const __m256d yv = _mm256_loadu_pd(py + 2 * i);
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(yv, mul_const(ar, ai, xv)));
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

cplx phase_dot(std::span<const cplx> values,
               std::span<const std::uint64_t> positions, std::uint64_t c,
               std::span<const cplx> twiddles) {
    const std::uint64_t mask = twiddles.size() - 1;
    const std::size_t n = values.size();
    const double *pv = raw(values.data());
    const double *pt = raw(twiddles.data());
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const std::uint64_t i0 = (positions[i] * c) & mask;
        const std::uint64_t i1 = (positions[i + 1] * c) & mask;
        const __m256d w = _mm256_insertf128_pd(
            _mm256_castpd128_pd256(_mm_loadu_pd(pt + 2 * i0)),
            _mm_loadu_pd(pt + 2 * i1), 1);
        acc = _mm256_add_pd(acc, mul_pair(_mm256_loadu_pd(pv + 2 * i), w));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double re = lanes[0] + lanes[2];
    double im = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        const cplx w = twiddles[(positions[i] * c) & mask];
        re += values[i].real() * w.real() - values[i].imag() * w.imag();
        im += values[i].real() * w.imag() + values[i].imag() * w.real();
    }
    return {re, im};
}

void butterfly(std::span<cplx> lo, std::span<cplx> hi, double scale) {
    const std::size_t n = lo.size();
    const __m256d s = _mm256_set1_pd(scale);
    double *pl = raw(lo.data());
    double *ph = raw(hi.data());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d u = _mm256_loadu_pd(pl + 2 * i);
        const __m256d v = _mm256_loadu_pd(ph + 2 * i);
        _mm256_storeu_pd(pl + 2 * i, _mm256_mul_pd(s, _mm256_add_pd(u, v)));
        _mm256_storeu_pd(ph + 2 * i, _mm256_mul_pd(s, _mm256_sub_pd(u, v)));
    }
    for (; i < n; ++i) {
        const cplx u = lo[i];
        const cplx v = hi[i];
        lo[i] = cplx(scale * (u.real() + v.real()), scale * (u.imag() + v.imag()));
        hi[i] = cplx(scale * (u.real() - v.real()), scale * (u.imag() - v.imag()));
    }
}

void cscale(cplx alpha, std::span<cplx> v) {
    const std::size_t n = v.size();
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    double *p = raw(v.data());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        _mm256_storeu_pd(p + 2 * i, mul_const(ar, ai, _mm256_loadu_pd(p + 2 * i)));
    }
    for (; i < n; ++i) {
        v[i] *= alpha;
    }
}

} // namespace

const KernelTable avx2_table{
    "avx2", norm_squared, abs2, caxpy, phase_dot, butterfly, cscale,
};

} // namespace shorsim::kernels::detail
