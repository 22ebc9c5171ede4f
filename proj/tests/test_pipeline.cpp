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

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "shorsim/distributions.hpp"
#include "shorsim/errors.hpp"
#include "shorsim/pipeline.hpp"
#include "shorsim/qft.hpp"

using namespace shorsim;

namespace {

const Backend kBackends[] = {Backend::dense, Backend::sparse};

// Probability mass on each function-register vector, keyed by packed Y bits.
std::map<u64, double> function_marginal(const StateVector &s) {
    std::map<u64, double> m;
    const u64 mask = s.layout().function_space() - 1;
    s.for_each_nonzero([&](u64 idx, cplx a) { m[idx & mask] += std::norm(a); });
    return m;
}

} // namespace

TEST_CASE("init_uniform") {
    const auto inst = ProblemInstance::make(15, 7);
    for (Backend b : kBackends) {
        for (unsigned ell : {1U, 2U}) {
            const StateVector s = init_uniform(inst, ell, b);
            CHECK(s.nonzero_count() == 256);
            CHECK(norm_squared(s) == doctest::Approx(1.0).epsilon(1e-14));
            s.for_each_nonzero([&](u64 idx, cplx a) {
                const Outcome o = unpack_index(s.layout(), idx);
                for (unsigned i = 1; i <= ell; ++i) {
                    REQUIRE(o[i] == 0);
                }
                REQUIRE(std::abs(a) == doctest::Approx(1.0 / 16));
            });
        }
    }
}

TEST_CASE("fan-out examples and permutation property") {
    const auto inst = ProblemInstance::make(15, 7);
    for (Backend b : kBackends) {
        const StateVector s1 = apply_modexp_fanout(init_uniform(inst, 1, b), inst);
        CHECK(std::abs(s1.amplitude(pack_index(s1.layout(), 2, std::vector<u64>{4}))) ==
              doctest::Approx(1.0 / 16));
        CHECK(s1.amplitude(pack_index(s1.layout(), 2, std::vector<u64>{0})) == cplx{});
        CHECK(s1.nonzero_count() == 256);

        const StateVector s2 = apply_modexp_fanout(init_uniform(inst, 2, b), inst);
        CHECK(std::abs(s2.amplitude(pack_index(s2.layout(), 0, std::vector<u64>{1, 1}))) ==
              doctest::Approx(1.0 / 16));
        CHECK(s2.nonzero_count() == 256);
        s2.for_each_nonzero([&](u64 idx, cplx) {
            const Outcome o = unpack_index(s2.layout(), idx);
            REQUIRE(o[1] == oracle::pow_mod(7, o[0], 15));
            REQUIRE(o[2] == o[1]);
        });
        CHECK_THROWS_AS((void)apply_modexp_fanout(s1, inst), StageOrderError);
    }
}

TEST_CASE("fan-out preserves magnitudes on random superpositions") {
    const auto inst = ProblemInstance::make(21, 5);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    StateVector s = init_uniform(inst, 2, Backend::sparse);
    std::vector<cplx> amps(inst.q);
    for (u64 a = 0; a < inst.q; ++a) {
        amps[a] = cplx(g(rng), g(rng));
        s.set_amplitude(pack_index(s.layout(), a, std::vector<u64>{0, 0}), amps[a]);
    }
    const StateVector t = apply_modexp_fanout(s, inst);
    CHECK(t.nonzero_count() == inst.q);
    for (u64 a = 0; a < inst.q; ++a) {
        const u64 y = oracle::pow_mod(5, a, 21);
        REQUIRE(t.amplitude(pack_index(t.layout(), a, std::vector<u64>{y, y})) == amps[a]);
    }
}

TEST_CASE("QFT without fan-out sends all mass to c = 0") {
    const auto inst = ProblemInstance::make(15, 7);
    for (Backend b : kBackends) {
        for (QftMethod m : {QftMethod::direct, QftMethod::gates}) {
            const StateVector s = apply_qft_register1(init_uniform(inst, 1, b), inst, m);
            CHECK(std::norm(s.amplitude(0)) == doctest::Approx(1.0).epsilon(1e-12));
            double rest = 0.0;
            s.for_each_nonzero([&](u64 idx, cplx a) {
                if (idx != 0) {
                    rest += std::norm(a);
                }
            });
            CHECK(rest < 1e-20);
        }
    }
}

TEST_CASE("gate form: small examples") {
    std::vector<cplx> one{1.0, 0.0};
    qft_rows_gates(one, 1, 1);
    CHECK(std::abs(one[0] - cplx(M_SQRT1_2)) < 1e-15);
    CHECK(std::abs(one[1] - cplx(M_SQRT1_2)) < 1e-15);

    std::vector<cplx> basis(8);
    basis[1] = 1.0;
    qft_rows_gates(basis, 3, 1);
    for (u64 c = 0; c < 8; ++c) {
        const cplx want = std::polar(1.0 / std::sqrt(8.0), 2.0 * M_PI * c / 8.0);
        CHECK(std::abs(basis[c] - want) < 1e-15);
    }
}

TEST_CASE("both transform forms match a naive DFT, several columns") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (unsigned s = 1; s <= 9; ++s) {
        const u64 q = u64{1} << s;
        const std::size_t m = 3;
        std::vector<cplx> in(q * m);
        for (auto &z : in) {
            z = cplx(g(rng), g(rng));
        }
        std::vector<cplx> direct(q * m);
        dft_rows_direct(in, direct, q, m);
        std::vector<cplx> gates = in;
        qft_rows_gates(gates, s, m);
        for (std::size_t col = 0; col < m; ++col) {
            std::vector<cplx> column(q);
            for (u64 a = 0; a < q; ++a) {
                column[a] = in[a * m + col];
            }
            const auto ref = oracle::dft(column);
            for (u64 c = 0; c < q; ++c) {
                REQUIRE(std::abs(direct[c * m + col] - ref[c]) < 1e-11);
                REQUIRE(std::abs(gates[c * m + col] - ref[c]) < 1e-11);
            }
        }
    }
}

TEST_CASE("sparse column transform matches the dense one") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    const u64 q = 128;
    const auto tw = twiddle_table(q);
    std::vector<u64> pos{0, 3, 10, 77, 127};
    std::vector<cplx> vals;
    std::vector<cplx> dense(q);
    for (u64 p : pos) {
        vals.emplace_back(g(rng), g(rng));
        dense[p] = vals.back();
    }
    std::vector<cplx> out(q);
    dft_sparse_column(pos, vals, out, tw);
    const auto ref = oracle::dft(dense);
    for (u64 c = 0; c < q; ++c) {
        CHECK(std::abs(out[c] - ref[c]) < 1e-12);
    }
}

TEST_CASE("gates vs direct on full pipelines, both backends") {
    for (auto [n, x] : {std::pair<u64, u64>{15, 7}, {21, 2}, {33, 5}, {35, 3}}) {
        const auto inst = ProblemInstance::make(n, x);
        for (Backend b : kBackends) {
            CAPTURE(n);
            const StateVector d = run_pipeline(inst, {1, b, QftMethod::direct});
            const StateVector gt = run_pipeline(inst, {1, b, QftMethod::gates});
            CHECK(max_amplitude_deviation(d, gt) <= 1e-10);
        }
    }
}

TEST_CASE("norm conservation stage by stage") {
    for (auto [n, x] : {std::pair<u64, u64>{15, 7}, {21, 2}, {39, 7}}) {
        const auto inst = ProblemInstance::make(n, x);
        for (Backend b : kBackends) {
            for (QftMethod m : {QftMethod::direct, QftMethod::gates}) {
                StateVector s = init_uniform(inst, 1, b);
                CHECK(std::abs(norm_squared(s) - 1.0) <= 1e-12);
                s = apply_modexp_fanout(std::move(s), inst);
                CHECK(std::abs(norm_squared(s) - 1.0) <= 1e-12);
                s = apply_qft_register1(std::move(s), inst, m);
                CHECK(std::abs(norm_squared(s) - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("QFT leaves the function-register marginal unchanged") {
    for (auto [n, x] : {std::pair<u64, u64>{15, 7}, {21, 2}}) {
        const auto inst = ProblemInstance::make(n, x);
        for (Backend b : kBackends) {
            const StateVector pre = apply_modexp_fanout(init_uniform(inst, 2, b), inst);
            const StateVector post = apply_qft_register1(pre, inst, QftMethod::direct);
            const auto mp = function_marginal(pre);
            const auto mq = function_marginal(post);
            REQUIRE(mp.size() == mq.size());
            for (const auto &[y, p] : mp) {
                CHECK(std::abs(mq.at(y) - p) <= 1e-12);
            }
        }
    }
}

TEST_CASE("run_pipeline examples") {
    const auto d1 = measurement_distribution(run_pipeline(ProblemInstance::make(15, 7)));
    std::size_t big = 0;
    for (const auto &e : d1.entries()) {
        if (e.probability > 1e-20) {
            ++big;
            CHECK(e.probability == doctest::Approx(1.0 / 16).epsilon(1e-10));
        }
    }
    CHECK(big == 16);
    CHECK(std::abs(std::norm(run_pipeline(ProblemInstance::make(15, 7))
                                 .amplitude(pack_index(d1.layout(), 64, std::vector<u64>{1}))) -
                   1.0 / 16) < 1e-12);

    const auto d2 = measurement_distribution(
        run_pipeline(ProblemInstance::make(15, 7), {2, Backend::dense, QftMethod::direct}));
    const auto c1 = marginal(d1, {1});
    const auto c2 = marginal(d2, {1});
    for (u64 c = 0; c < 256; ++c) {
        REQUIRE(std::abs(c1.probability({c}) - c2.probability({c})) <= 1e-12);
    }

    const auto d21 = measurement_distribution(run_pipeline(ProblemInstance::make(21, 2)));
    CHECK(std::abs(d21.total() - 1.0) <= 1e-12);
}

TEST_CASE("linearity examples") {
    const auto inst = ProblemInstance::make(15, 7);
    std::vector<u64> zero{0};
    const auto r0 = linearity_check(inst, zero);
    CHECK(r0.max_discrepancy == 0.0);
    CHECK(r0.within_tolerance);

    std::vector<u64> all(256);
    std::iota(all.begin(), all.end(), u64{0});
    for (Backend b : kBackends) {
        const auto r = linearity_check(inst, all, b, 2);
        CHECK(r.sample_size == 256);
        CHECK(r.max_discrepancy <= 1e-12);
    }

    std::vector<u64> pair{3, 200};
    CHECK(linearity_check(inst, pair).max_discrepancy <= 1e-12);

    std::vector<u64> out_of_range{256};
    CHECK_THROWS_AS((void)linearity_check(inst, out_of_range), RangeError);
}

TEST_CASE("method and backend names round trip") {
    for (QftMethod m : {QftMethod::direct, QftMethod::gates}) {
        CHECK(qft_method_from_string(to_string(m)) == m);
    }
    for (Backend b : kBackends) {
        CHECK(backend_from_string(to_string(b)) == b);
    }
    CHECK_THROWS_AS((void)qft_method_from_string("fft"), RangeError);
    CHECK_THROWS_AS((void)backend_from_string("gpu"), RangeError);
}
