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

#include <cstddef>

#include "variants.hpp"

namespace shorsim::kernels::detail {
namespace {

double norm_squared(std::span<const cplx> v) {
    double acc = 0.0;
    for (const cplx &z : v) {
        acc += z.real() * z.real() + z.imag() * z.imag();
    }
    return acc;
}

void abs2(std::span<const cplx> v, std::span<double> out) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
    }
}

void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        y[i] = cplx(y[i].real() + ar * xr - ai * xi,
                    y[i].imag() + ar * xi + ai * xr);
    }
}

cplx phase_dot(std::span<const cplx> values,
               std::span<const std::uint64_t> positions, std::uint64_t c,
               std::span<const cplx> twiddles) {
    const std::uint64_t mask = twiddles.size() - 1;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const cplx w = twiddles[(positions[i] * c) & mask];
        re += values[i].real() * w.real() - values[i].imag() * w.imag();
        im += values[i].real() * w.imag() + values[i].imag() * w.real();
    }
    return {re, im};
}

void butterfly(std::span<cplx> lo, std::span<cplx> hi, double scale) {
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const cplx u = lo[i];
        const cplx v = hi[i];
        lo[i] = cplx(scale * (u.real() + v.real()), scale * (u.imag() + v.imag()));
        hi[i] = cplx(scale * (u.real() - v.real()), scale * (u.imag() - v.imag()));
    }
}

void cscale(cplx alpha, std::span<cplx> v) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    for (cplx &z : v) {
        z = cplx(ar * z.real() - ai * z.imag(), ar * z.imag() + ai * z.real());
    }
}

} // namespace

const KernelTable scalar_table{
    "scalar", norm_squared, abs2, caxpy, phase_dot, butterfly, cscale,
};

} // namespace shorsim::kernels::detail
