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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shorsim/errors.hpp"
#include "shorsim/numtheory.hpp"

using namespace shorsim;

TEST_CASE("gcd") {
    CHECK(gcd(48, 15) == 3);
    CHECK(gcd(7, 1) == 1);
    CHECK(gcd(0, 9) == 9);
    CHECK_THROWS_AS((void)gcd(0, 0), UndefinedInputError);
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(7, 4, 15) == 1);
    CHECK(mod_pow(2, 6, 21) == 1);
    CHECK(mod_pow(11, 0, 35) == 1);
    CHECK(mod_pow(-1, 3, 15) == 14);
    CHECK_THROWS_AS((void)mod_pow(3, 2, 1), RangeError);

    // Large moduli need 128-bit intermediates.
    const u64 big = (u64{1} << 61) - 1; // prime
    CHECK(mod_pow(3, big - 1, big) == 1);
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(7, 15) == 4);
    CHECK(multiplicative_order(2, 21) == 6);
    CHECK(multiplicative_order(1, 15) == 1);

    try {
        (void)multiplicative_order(6, 15);
        FAIL("expected NotCoprimeError");
    } catch (const NotCoprimeError &e) {
        CHECK(e.gcd() == 3);
    }
}

TEST_CASE("order is minimal for every coprime base") {
    for (u64 n : {15ULL, 21ULL, 33ULL, 35ULL, 39ULL, 91ULL}) {
        for (u64 x = 2; x < n; ++x) {
            if (oracle::gcd(x, n) != 1) {
                continue;
            }
            const u64 r = multiplicative_order(x, n);
            CHECK(r == oracle::order(x, n));
            CHECK(mod_pow(static_cast<i64>(x), r, n) == 1);
            for (u64 t = 1; t < r; ++t) {
                CHECK(mod_pow(static_cast<i64>(x), t, n) != 1);
            }
        }
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(12) == 4);
    for (u64 r = 1; r <= 1000; ++r) {
        REQUIRE(euler_phi(r) == oracle::phi(r));
    }
}

TEST_CASE("continued fraction convergents") {
    using V = std::vector<Rational>;
    CHECK(continued_fraction_convergents(192, 256) == V{{0, 1}, {1, 1}, {3, 4}});
    CHECK(continued_fraction_convergents(0, 256) == V{{0, 1}});
    CHECK(continued_fraction_convergents(64, 256) == V{{0, 1}, {1, 4}});
    CHECK_THROWS_AS((void)continued_fraction_convergents(256, 256), RangeError);
}

TEST_CASE("convergent properties on random fractions") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 2000; ++trial) {
        const u64 q = u64{1} << (1 + rng() % 20);
        const u64 c = rng() % q;
        const auto convs = continued_fraction_convergents(c, q);
        REQUIRE(!convs.empty());

        const Rational last = convs.back();
        CHECK(last == Rational::make(c, q));
        for (std::size_t i = 1; i < convs.size(); ++i) {
            CHECK(convs[i].denominator >= convs[i - 1].denominator);
            if (i >= 2) {
                CHECK(convs[i].denominator > convs[i - 1].denominator);
            }
        }
        for (const Rational &r : convs) {
            CHECK(oracle::gcd(r.numerator, r.denominator) == 1);
            // |c/q - d/t| < 1/t^2  <=>  |c t - d q| * t < q
            const long double diff = std::abs(static_cast<long double>(c) * r.denominator -
                                              static_cast<long double>(r.numerator) * q);
            CHECK(diff * r.denominator < static_cast<long double>(q));
        }
    }
}

TEST_CASE("recover_order_from_sample") {
    CHECK(recover_order_from_sample(192, 256, 7, 15, 1) == std::optional<u64>{4});
    CHECK_FALSE(recover_order_from_sample(0, 256, 7, 15, 1).has_value());
    CHECK(recover_order_from_sample(128, 256, 7, 15, 2) == std::optional<u64>{4});
    CHECK_FALSE(recover_order_from_sample(128, 256, 7, 15, 1).has_value());
    CHECK(recover_order_from_sample(64, 256, 7, 15, 1) == std::optional<u64>{4});
}

TEST_CASE("factor_from_order") {
    CHECK(factor_from_order(15, 7, 4) == std::optional<FactorPair>{{3, 5}});
    CHECK_FALSE(factor_from_order(15, 14, 2).has_value());
    CHECK(factor_from_order(21, 2, 6) == std::optional<FactorPair>{{3, 7}});
    CHECK_FALSE(factor_from_order(21, 4, 3).has_value()); // odd order
    CHECK_THROWS_AS((void)factor_from_order(15, 7, 3), InvalidOrderError);

    for (u64 n : {15ULL, 21ULL, 33ULL, 35ULL, 39ULL, 105ULL, 231ULL}) {
        for (u64 x = 2; x < n; ++x) {
            if (oracle::gcd(x, n) != 1) {
                continue;
            }
            if (const auto f = factor_from_order(n, x, oracle::order(x, n))) {
                CHECK(f->f1 * f->f2 == n);
                CHECK(1 < f->f1);
                CHECK(f->f1 <= f->f2);
                CHECK(f->f2 < n);
            }
        }
    }
}

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK(integer_root(1000, 3) == 10);
    CHECK(integer_root(999, 3) == 9);
    CHECK(prime_power_base(9) == std::optional<u64>{3});
    CHECK(prime_power_base(125) == std::optional<u64>{5});
    CHECK(prime_power_base(13) == std::optional<u64>{13});
    CHECK_FALSE(prime_power_base(15).has_value());
    CHECK_FALSE(prime_power_base(225).has_value());
    CHECK(bit_length(14) == 4);
    CHECK(bit_length(16) == 5);
}
