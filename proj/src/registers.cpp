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

#include "shorsim/registers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "shorsim/errors.hpp"

namespace shorsim {

ModulusPower choose_modulus_power(u64 n) {
    if (n < 3) {
        throw RangeError("n must be at least 3");
    }
    if (n > (u64{1} << 30)) {
        throw RangeError("n too large for a 64-bit control register");
    }
    const u64 lower = n * n;
    unsigned s = 0;
    while ((u64{1} << s) < lower) {
        ++s;
    }
    return {u64{1} << s, s};
}

ProblemInstance ProblemInstance::make(u64 n, u64 x) {
    const ModulusPower mp = choose_modulus_power(n);
    if (x <= 1 || x >= n) {
        throw RangeError("base x must satisfy 1 < x < n");
    }
    const u64 g = gcd(x, n);
    if (g != 1) {
        throw NotCoprimeError(x, n, g);
    }
    return ProblemInstance{n, x, mp.q, mp.s};
}

RegisterLayout RegisterLayout::make(unsigned s, unsigned width, unsigned ell,
                                    unsigned qubit_cap) {
    if (ell == 0) {
        throw RangeError("at least one function register is required");
    }
    if (s == 0 || width == 0) {
        throw RangeError("register widths must be positive");
    }
    const unsigned total = s + ell * width;
    if (total > qubit_cap || total > 62) {
        throw CapacityError("layout needs " + std::to_string(total) +
                            " qubits, cap is " + std::to_string(qubit_cap));
    }
    return RegisterLayout(s, width, ell, qubit_cap);
}

RegisterLayout RegisterLayout::for_instance(const ProblemInstance &inst,
                                            unsigned ell, unsigned qubit_cap) {
    return make(inst.s, bit_length(inst.n - 1), ell, qubit_cap);
}

unsigned RegisterLayout::register_width(unsigned position) const {
    if (position == 0 || position > register_count()) {
        throw RangeError("register position out of range");
    }
    return position == 1 ? s_ : width_;
}

u64 pack_index(const RegisterLayout &layout, u64 a, std::span<const u64> ys) {
    if (ys.size() != layout.ell()) {
        throw RangeError("expected " + std::to_string(layout.ell()) +
                         " function register values");
    }
    if (a >= layout.register1_size()) {
        throw RangeError("register-1 value out of range");
    }
    const u64 limit = u64{1} << layout.width();
    u64 index = a;
    for (u64 y : ys) {
        if (y >= limit) {
            throw RangeError("function register value out of range");
        }
        index = (index << layout.width()) | y;
    }
    return index;
}

u64 pack_index(const RegisterLayout &layout, const Outcome &outcome) {
    if (outcome.empty()) {
        throw RangeError("empty outcome");
    }
    return pack_index(layout, outcome.front(),
                      std::span<const u64>(outcome).subspan(1));
}

Outcome unpack_index(const RegisterLayout &layout, u64 index) {
    if (index >= layout.dimension()) {
        throw RangeError("index out of range");
    }
    Outcome out(layout.register_count());
    const u64 mask = (u64{1} << layout.width()) - 1;
    for (unsigned i = layout.ell(); i >= 1; --i) {
        out[i] = index & mask;
        index >>= layout.width();
    }
    out[0] = index;
    return out;
}

std::string_view to_string(Backend b) {
    return b == Backend::dense ? "dense" : "sparse";
}

Backend backend_from_string(std::string_view name) {
    if (name == "dense") {
        return Backend::dense;
    }
    if (name == "sparse") {
        return Backend::sparse;
    }
    throw RangeError("unknown backend '" + std::string(name) + "'");
}

StateVector::StateVector(RegisterLayout layout, Backend backend)
    : layout_(layout), backend_(backend) {
    if (backend_ == Backend::dense) {
        dense_.assign(layout_.dimension(), cplx{});
    }
}

cplx StateVector::amplitude(u64 index) const {
    if (index >= layout_.dimension()) {
        throw RangeError("index out of range");
    }
    if (backend_ == Backend::dense) {
        return dense_[index];
    }
    const auto it = sparse_.find(index);
    return it == sparse_.end() ? cplx{} : it->second;
}

void StateVector::set_amplitude(u64 index, cplx value) {
    if (index >= layout_.dimension()) {
        throw RangeError("index out of range");
    }
    if (backend_ == Backend::dense) {
        dense_[index] = value;
    } else if (value == cplx{}) {
        sparse_.erase(index);
    } else {
        sparse_[index] = value;
    }
}

std::size_t StateVector::nonzero_count() const {
    if (backend_ == Backend::sparse) {
        return sparse_.size();
    }
    return static_cast<std::size_t>(
        std::count_if(dense_.begin(), dense_.end(), [](cplx z) { return z != cplx{}; }));
}

std::span<cplx> StateVector::dense_data() {
    if (backend_ != Backend::dense) {
        throw std::logic_error("dense_data() on a sparse state");
    }
    return dense_;
}

std::span<const cplx> StateVector::dense_data() const {
    if (backend_ != Backend::dense) {
        throw std::logic_error("dense_data() on a sparse state");
    }
    return dense_;
}

std::map<u64, cplx> &StateVector::sparse_data() {
    if (backend_ != Backend::sparse) {
        throw std::logic_error("sparse_data() on a dense state");
    }
    return sparse_;
}

const std::map<u64, cplx> &StateVector::sparse_data() const {
    if (backend_ != Backend::sparse) {
        throw std::logic_error("sparse_data() on a dense state");
    }
    return sparse_;
}

double norm_squared(const StateVector &state) {
    if (state.backend() == Backend::dense) {
        return kernels::active().norm_squared(state.dense_data());
    }
    double acc = 0.0;
    for (const auto &[i, v] : state.sparse_data()) {
        acc += std::norm(v);
    }
    return acc;
}

StateVector densify(const StateVector &state, unsigned qubit_cap) {
    if (state.layout().total_qubits() > qubit_cap) {
        throw CapacityError("dense state would need " +
                            std::to_string(state.layout().total_qubits()) +
                            " qubits, cap is " + std::to_string(qubit_cap));
    }
    if (state.backend() == Backend::dense) {
        return state;
    }
    StateVector out(state.layout(), Backend::dense);
    auto data = out.dense_data();
    for (const auto &[i, v] : state.sparse_data()) {
        data[i] = v;
    }
    return out;
}

StateVector sparsify(const StateVector &state, double threshold) {
    StateVector out(state.layout(), Backend::sparse);
    auto &map = out.sparse_data();
    state.for_each_nonzero([&](u64 i, cplx v) {
        if (std::abs(v) > threshold) {
            map.emplace_hint(map.end(), i, v);
        }
    });
    return out;
}

double max_amplitude_deviation(const StateVector &a, const StateVector &b) {
    if (!(a.layout() == b.layout())) {
        throw RangeError("layouts differ");
    }
    if (a.backend() == Backend::dense && b.backend() == Backend::dense) {
        const auto da = a.dense_data();
        const auto db = b.dense_data();
        double worst = 0.0;
        for (std::size_t i = 0; i < da.size(); ++i) {
            worst = std::max(worst, std::abs(da[i] - db[i]));
        }
        return worst;
    }
    double worst = 0.0;
    a.for_each_nonzero([&](u64 i, cplx v) {
        worst = std::max(worst, std::abs(v - b.amplitude(i)));
    });
    b.for_each_nonzero([&](u64 i, cplx v) {
        worst = std::max(worst, std::abs(v - a.amplitude(i)));
    });
    return worst;
}

} // namespace shorsim
