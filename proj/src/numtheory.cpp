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

#include "shorsim/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "shorsim/errors.hpp"

namespace shorsim {

Rational Rational::make(u64 num, u64 den) {
    if (den == 0) {
        throw UndefinedInputError("rational with zero denominator");
    }
    const u64 g = num == 0 ? den : gcd(num, den);
    return Rational{num / g, den / g};
}

u64 gcd(u64 a, u64 b) {
    if (a == 0 && b == 0) {
        throw UndefinedInputError("gcd(0, 0) is undefined");
    }
    while (b != 0) {
        const u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 mul_mod(u64 a, u64 b, u64 n) {
    return static_cast<u64>(static_cast<u128>(a) * b % n);
}

u64 mod_pow(i64 x, u64 e, u64 n) {
    if (n < 2) {
        throw RangeError("mod_pow requires modulus >= 2");
    }
    const i64 sn = static_cast<i64>(n);
    u64 base = static_cast<u64>(((x % sn) + sn) % sn);
    u64 result = 1;
    while (e != 0) {
        if (e & 1U) {
            result = mul_mod(result, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1U;
    }
    return result;
}

u64 multiplicative_order(u64 x, u64 n) {
    if (n < 2) {
        throw RangeError("multiplicative_order requires modulus >= 2");
    }
    const u64 g = gcd(x % n, n);
    if (g != 1) {
        throw NotCoprimeError(x, n, g);
    }
    const u64 base = x % n;
    u64 power = base;
    u64 r = 1;
    while (power != 1) {
        power = mul_mod(power, base, n);
        ++r;
    }
    return r;
}

u64 euler_phi(u64 r) {
    if (r == 0) {
        throw RangeError("euler_phi requires r >= 1");
    }
    u64 result = r;
    u64 m = r;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

std::vector<Rational> continued_fraction_convergents(u64 c, u64 q) {
    if (q == 0 || c >= q) {
        throw RangeError("continued fraction expansion requires 0 <= c < q");
    }
    std::vector<Rational> out;
    // h/k recurrences seeded with h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0.
    u64 h_prev2 = 0;
    u64 h_prev1 = 1;
    u64 k_prev2 = 1;
    u64 k_prev1 = 0;
    u64 num = c;
    u64 den = q;
    while (true) {
        const u64 a = num / den;
        const u64 h = a * h_prev1 + h_prev2;
        const u64 k = a * k_prev1 + k_prev2;
        out.push_back(Rational{h, k});
        const u64 rem = num % den;
        if (rem == 0) {
            break;
        }
        num = den;
        den = rem;
        h_prev2 = h_prev1;
        h_prev1 = h;
        k_prev2 = k_prev1;
        k_prev1 = k;
    }
    return out;
}

std::optional<u64> recover_order_from_sample(u64 c, u64 q, u64 x, u64 n,
                                             u64 multiplier_bound) {
    for (const Rational &conv : continued_fraction_convergents(c, q)) {
        const u64 t = conv.denominator;
        if (t >= n) {
            break;
        }
        for (u64 m = 1; m <= multiplier_bound && m * t < n; ++m) {
            if (mod_pow(static_cast<i64>(x), m * t, n) == 1) {
                return m * t;
            }
        }
    }
    return std::nullopt;
}

std::optional<FactorPair> factor_from_order(u64 n, u64 x, u64 r) {
    if (r == 0 || mod_pow(static_cast<i64>(x), r, n) != 1) {
        throw InvalidOrderError("x^r is not 1 mod n for the supplied r");
    }
    if (r % 2 != 0) {
        return std::nullopt;
    }
    const u64 half = mod_pow(static_cast<i64>(x), r / 2, n);
    if (half == n - 1) {
        return std::nullopt;
    }
    const u64 g_minus = gcd((half + n - 1) % n, n);
    const u64 g_plus = gcd((half + 1) % n, n);
    const auto nontrivial = [n](u64 g) { return g > 1 && g < n; };
    if (!nontrivial(g_minus) || !nontrivial(g_plus)) {
        return std::nullopt;
    }
    // For n with more than two prime factors the two gcds need not multiply
    // to n; pair the first with its cofactor so f1 * f2 == n always holds.
    const u64 other = n / g_minus;
    return FactorPair{std::min(g_minus, other), std::max(g_minus, other)};
}

bool is_prime(u64 n) {
    if (n < 2) {
        return false;
    }
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

// Returns true when base^k <= limit, without overflowing.
bool pow_at_most(u64 base, unsigned k, u64 limit) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= base;
        if (acc > limit) {
            return false;
        }
    }
    return true;
}

} // namespace

u64 integer_root(u64 n, unsigned k) {
    if (k == 0) {
        throw RangeError("integer_root requires k >= 1");
    }
    if (k == 1 || n < 2) {
        return n;
    }
    auto guess = static_cast<u64>(
        std::pow(static_cast<double>(n), 1.0 / static_cast<double>(k)));
    while (guess > 0 && !pow_at_most(guess, k, n)) {
        --guess;
    }
    while (pow_at_most(guess + 1, k, n)) {
        ++guess;
    }
    return guess;
}

std::optional<u64> prime_power_base(u64 n) {
    if (n < 2) {
        return std::nullopt;
    }
    if (is_prime(n)) {
        return n;
    }
    for (unsigned k = 2; k <= bit_length(n); ++k) {
        const u64 root = integer_root(n, k);
        if (root >= 2 && pow_at_most(root, k, n) && !pow_at_most(root, k, n - 1) &&
            is_prime(root)) {
            return root;
        }
    }
    return std::nullopt;
}

unsigned bit_length(u64 v) {
    return static_cast<unsigned>(std::bit_width(v));
}

} // namespace shorsim
