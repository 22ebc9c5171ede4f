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
// Independent brute-force references used only by tests. Nothing here calls
// into the library paths it is used to check.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using lcplx = std::complex<long double>;

inline u64 gcd(u64 a, u64 b) {
    while (b != 0) {
        const u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u64 pow_mod(u64 x, u64 e, u64 n) {
    u64 r = 1 % n;
    for (u64 i = 0; i < e; ++i) {
        r = r * x % n;
    }
    return r;
}

inline u64 order(u64 x, u64 n) {
    u64 p = x % n;
    for (u64 r = 1; r <= n; ++r) {
        if (p == 1) {
            return r;
        }
        p = p * x % n;
    }
    return 0;
}

inline u64 phi(u64 r) {
    u64 count = 0;
    for (u64 k = 1; k <= r; ++k) {
        count += gcd(k, r) == 1 ? 1 : 0;
    }
    return count;
}

inline lcplx phase(u64 num, u64 den) {
    const long double ang = 2.0L * std::numbers::pi_v<long double> *
                            static_cast<long double>(num % den) /
                            static_cast<long double>(den);
    return {std::cos(ang), std::sin(ang)};
}

/// |q^{-1} sum_{a < q, x^a == x^k} exp(2 pi i a c / q)|^2 by direct summation.
inline double eq1(u64 n, u64 x, u64 q, u64 c, u64 k) {
    const u64 target = pow_mod(x, k, n);
    lcplx acc = 0;
    u64 p = 1;
    for (u64 a = 0; a < q; ++a) {
        if (p == target) {
            acc += phase(a * c, q);
        }
        p = p * x % n;
    }
    acc /= static_cast<long double>(q);
    return static_cast<double>(std::norm(acc));
}

/// Naive DFT with positive phase and 1/sqrt(q) scaling.
inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>> &in) {
    const u64 q = in.size();
    std::vector<std::complex<double>> out(q);
    const long double norm = 1.0L / std::sqrt(static_cast<long double>(q));
    for (u64 c = 0; c < q; ++c) {
        lcplx acc = 0;
        for (u64 a = 0; a < q; ++a) {
            acc += lcplx(in[a].real(), in[a].imag()) * phase(a * c, q);
        }
        acc *= norm;
        out[c] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return out;
}

/// -sum (m_k/q) log2(m_k/q), m_k = #{a < q : a == k mod r}.
inline double residue_class_entropy(u64 q, u64 r) {
    double h = 0.0;
    for (u64 k = 0; k < r; ++k) {
        u64 m = 0;
        for (u64 a = k; a < q; a += r) {
            ++m;
        }
        const double p = static_cast<double>(m) / static_cast<double>(q);
        h -= p * std::log2(p);
    }
    return h;
}

/// Smallest q = 2^s with q >= n^2.
inline u64 modulus_power(u64 n) {
    u64 q = 1;
    while (q < n * n) {
        q <<= 1U;
    }
    return q;
}

} // namespace oracle
