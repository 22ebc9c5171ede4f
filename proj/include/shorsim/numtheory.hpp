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
 * Classical arithmetic used around order finding: gcd, modular powers,
 * multiplicative orders, totients, continued fractions and the reduction
 * from an even order to a factor pair.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace shorsim {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

/// Non-negative fraction kept in lowest terms.
struct Rational {
    u64 numerator{0};
    u64 denominator{1};

    /// Reduces num/den; throws UndefinedInputError when den == 0.
    static Rational make(u64 num, u64 den);

    friend bool operator==(const Rational &, const Rational &) = default;
};

/// Nontrivial split of n with f1 * f2 == n and 1 < f1 <= f2 < n.
struct FactorPair {
    u64 f1{0};
    u64 f2{0};

    friend bool operator==(const FactorPair &, const FactorPair &) = default;
};

/// Throws UndefinedInputError when a == b == 0.
[[nodiscard]] u64 gcd(u64 a, u64 b);

[[nodiscard]] u64 mul_mod(u64 a, u64 b, u64 n);

/// x^e mod n by repeated squaring. x may be negative; n >= 2.
[[nodiscard]] u64 mod_pow(i64 x, u64 e, u64 n);

/**
 * Smallest r >= 1 with x^r == 1 (mod n), found by walking the powers of x.
 * This brute-force loop is the ground truth every quantum run is checked
 * against.
 *
 * Throws NotCoprimeError (carrying gcd(x, n)) when x and n share a factor.
 */
[[nodiscard]] u64 multiplicative_order(u64 x, u64 n);

[[nodiscard]] u64 euler_phi(u64 r);

/// Convergents of c/q by increasing denominator; c == 0 yields {0/1}.
[[nodiscard]] std::vector<Rational> continued_fraction_convergents(u64 c,
                                                                   u64 q);

/**
 * Scans the convergents of c/q with denominator t < n, trying each multiple
 * m*t (1 <= m <= multiplier_bound, m*t < n), and returns the first candidate
 * with x^candidate == 1 (mod n).
 */
[[nodiscard]] std::optional<u64> recover_order_from_sample(
    u64 c, u64 q, u64 x, u64 n, u64 multiplier_bound = 1);

/**
 * Factor pair from an even order r with x^{r/2} != -1 (mod n). Returns empty
 * when r is odd, x^{r/2} == -1, or the gcds are trivial. Throws
 * InvalidOrderError when x^r != 1 (mod n).
 */
[[nodiscard]] std::optional<FactorPair> factor_from_order(u64 n, u64 x, u64 r);

[[nodiscard]] bool is_prime(u64 n);

/// Integer floor of n^(1/k), k >= 1.
[[nodiscard]] u64 integer_root(u64 n, unsigned k);

/// Returns the prime p when n == p^k for some k >= 1, otherwise empty.
[[nodiscard]] std::optional<u64> prime_power_base(u64 n);

/// Number of bits needed to write v (0 for v == 0).
[[nodiscard]] unsigned bit_length(u64 v);

} // namespace shorsim
