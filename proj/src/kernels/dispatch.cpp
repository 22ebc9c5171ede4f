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

#include <atomic>

#include "variants.hpp"

namespace shorsim::kernels {
namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(SHORSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

} // namespace

const KernelTable &scalar() { return detail::scalar_table; }

const KernelTable *avx2() {
#if defined(SHORSIM_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &detail::avx2_table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() {
    if (g_force_scalar.load(std::memory_order_relaxed)) {
        return scalar();
    }
    const KernelTable *best = avx2();
    return best != nullptr ? *best : scalar();
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

} // namespace shorsim::kernels
