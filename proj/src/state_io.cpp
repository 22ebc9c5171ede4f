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

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "shorsim/errors.hpp"
#include "shorsim/registers.hpp"

namespace shorsim {
namespace {

constexpr const char *kMagic = "shorsim-state";
constexpr int kVersion = 1;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_state(std::ostream &out, const StateVector &state) {
    const RegisterLayout &l = state.layout();
    out << kMagic << ' ' << kVersion << '\n'
        << l.s() << ' ' << l.width() << ' ' << l.ell() << ' '
        << to_string(state.backend()) << '\n'
        << state.nonzero_count() << '\n';
    state.for_each_nonzero([&](u64 i, cplx v) {
        out << i << ' ' << format_double(v.real()) << ' ' << format_double(v.imag())
            << '\n';
    });
}

StateVector read_state(std::istream &in, unsigned qubit_cap) {
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != kMagic || version != kVersion) {
        throw RangeError("not a shorsim state snapshot");
    }
    unsigned s = 0;
    unsigned width = 0;
    unsigned ell = 0;
    std::string backend;
    std::size_t count = 0;
    if (!(in >> s >> width >> ell >> backend >> count)) {
        throw RangeError("truncated state snapshot header");
    }
    StateVector state(RegisterLayout::make(s, width, ell, qubit_cap),
                      backend_from_string(backend));
    for (std::size_t k = 0; k < count; ++k) {
        u64 index = 0;
        double re = 0.0;
        double im = 0.0;
        if (!(in >> index >> re >> im)) {
            throw RangeError("truncated state snapshot body");
        }
        state.set_amplitude(index, cplx(re, im));
    }
    return state;
}

} // namespace shorsim
