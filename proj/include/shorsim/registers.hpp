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
 * Register layout, global index packing and the amplitude container.
 *
 * The machine has one control register of s qubits holding a (or c after
 * the transform) followed by ell identical function registers of `width`
 * qubits each. Register-1 occupies the most significant bits:
 *
 *     index = a * 2^(ell*width) + sum_i y_i * 2^((ell - i) * width)
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "shorsim/kernels.hpp"
#include "shorsim/numtheory.hpp"

namespace shorsim {

inline constexpr unsigned kDefaultQubitCap = 26;
inline constexpr double kSparseDropThreshold = 1e-15;
inline constexpr double kNormTolerance = 1e-12;

/// One order-finding run: factor n with base x, control register of size q = 2^s.
struct ProblemInstance {
    u64 n{0};
    u64 x{0};
    u64 q{0};
    unsigned s{0};

    /**
     * Validates n >= 3 and 1 < x < n, picks q = 2^s in [n^2, 2n^2).
     * Throws RangeError on bad n/x and NotCoprimeError when gcd(x, n) > 1.
     */
    static ProblemInstance make(u64 n, u64 x);

    friend bool operator==(const ProblemInstance &, const ProblemInstance &) = default;
};

struct ModulusPower {
    u64 q;
    unsigned s;
};

/// The unique power of two q = 2^s with n^2 <= q < 2n^2.
[[nodiscard]] ModulusPower choose_modulus_power(u64 n);

/// Values of each register in a basis state; element 0 is register-1.
using Outcome = std::vector<u64>;

class RegisterLayout {
  public:
    /// Throws RangeError when ell == 0 or a width is zero, CapacityError when
    /// s + ell * width exceeds qubit_cap.
    static RegisterLayout make(unsigned s, unsigned width, unsigned ell,
                               unsigned qubit_cap = kDefaultQubitCap);

    /// Layout for an instance: width is the bit length of n - 1.
    static RegisterLayout for_instance(const ProblemInstance &inst, unsigned ell,
                                       unsigned qubit_cap = kDefaultQubitCap);

    [[nodiscard]] unsigned s() const noexcept { return s_; }
    [[nodiscard]] unsigned width() const noexcept { return width_; }
    [[nodiscard]] unsigned ell() const noexcept { return ell_; }
    [[nodiscard]] unsigned qubit_cap() const noexcept { return cap_; }
    [[nodiscard]] unsigned total_qubits() const noexcept { return s_ + ell_ * width_; }
    [[nodiscard]] unsigned function_bits() const noexcept { return ell_ * width_; }
    [[nodiscard]] u64 dimension() const noexcept { return u64{1} << total_qubits(); }
    [[nodiscard]] u64 register1_size() const noexcept { return u64{1} << s_; }
    /// Number of distinct function-register contents (2^(ell*width)).
    [[nodiscard]] u64 function_space() const noexcept { return u64{1} << function_bits(); }
    /// Number of registers including register-1.
    [[nodiscard]] unsigned register_count() const noexcept { return ell_ + 1; }
    /// Qubit width of register at 1-based position (1 = register-1).
    [[nodiscard]] unsigned register_width(unsigned position) const;

    friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;

  private:
    RegisterLayout(unsigned s, unsigned width, unsigned ell, unsigned cap)
        : s_(s), width_(width), ell_(ell), cap_(cap) {}

    unsigned s_;
    unsigned width_;
    unsigned ell_;
    unsigned cap_;
};

/// Throws RangeError when a component is out of range or ys.size() != ell.
[[nodiscard]] u64 pack_index(const RegisterLayout &layout, u64 a,
                             std::span<const u64> ys);
[[nodiscard]] u64 pack_index(const RegisterLayout &layout, const Outcome &outcome);
[[nodiscard]] Outcome unpack_index(const RegisterLayout &layout, u64 index);

enum class Backend { dense, sparse };

[[nodiscard]] std::string_view to_string(Backend b);
/// Throws RangeError on unknown names.
[[nodiscard]] Backend backend_from_string(std::string_view name);

/**
 * Complex amplitudes over the packed register space.
 *
 * The dense backend stores all 2^(s + ell*width) amplitudes. The sparse
 * backend stores nonzero amplitudes only, keyed by packed index.
 */
class StateVector {
  public:
    /// All-zero state. Dense storage is allocated immediately.
    StateVector(RegisterLayout layout, Backend backend);

    [[nodiscard]] const RegisterLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] Backend backend() const noexcept { return backend_; }

    [[nodiscard]] cplx amplitude(u64 index) const;
    /// Sparse storage erases entries set to exactly zero.
    void set_amplitude(u64 index, cplx value);

    [[nodiscard]] std::size_t nonzero_count() const;

    /// Visits (index, amplitude) for nonzero amplitudes in ascending index order.
    template <class F> void for_each_nonzero(F &&f) const {
        if (backend_ == Backend::dense) {
            for (u64 i = 0; i < dense_.size(); ++i) {
                if (dense_[i] != cplx{}) {
                    f(i, dense_[i]);
                }
            }
        } else {
            for (const auto &[i, v] : sparse_) {
                f(i, v);
            }
        }
    }

    /// Throws std::logic_error on a sparse state.
    [[nodiscard]] std::span<cplx> dense_data();
    [[nodiscard]] std::span<const cplx> dense_data() const;
    /// Throws std::logic_error on a dense state.
    [[nodiscard]] std::map<u64, cplx> &sparse_data();
    [[nodiscard]] const std::map<u64, cplx> &sparse_data() const;

  private:
    RegisterLayout layout_;
    Backend backend_;
    std::vector<cplx> dense_;
    std::map<u64, cplx> sparse_;
};

[[nodiscard]] double norm_squared(const StateVector &state);

/// Dense copy; throws CapacityError when the layout exceeds qubit_cap.
[[nodiscard]] StateVector densify(const StateVector &state,
                                  unsigned qubit_cap = kDefaultQubitCap);

/// Sparse copy keeping amplitudes with magnitude above `threshold`.
[[nodiscard]] StateVector sparsify(const StateVector &state,
                                   double threshold = kSparseDropThreshold);

/// Max |a_i - b_i| over the union of supports. Layouts must match.
[[nodiscard]] double max_amplitude_deviation(const StateVector &a,
                                             const StateVector &b);

/**
 * Text snapshot:
 *
 *     shorsim-state 1
 *     <s> <width> <ell> <dense|sparse>
 *     <count>
 *     <index> <re> <im>      (count lines, ascending index, %.17g)
 */
void write_state(std::ostream &out, const StateVector &state);
/// Throws RangeError on malformed input.
[[nodiscard]] StateVector read_state(std::istream &in,
                                     unsigned qubit_cap = kDefaultQubitCap);

} // namespace shorsim
