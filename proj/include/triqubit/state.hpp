// Copyright 2026 The triqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "triqubit/errors.hpp"
#include "triqubit/scalar.hpp"

namespace triqubit {

/// Qubit position: X is the first qubit (index i), Y the second (j), Z the
/// third (k).
enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

/// Computational-basis measurement value of one qubit.
enum class Outcome : uint8_t { Zero = 0, One = 1 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};
inline constexpr std::array<Outcome, 2> kOutcomes = {Outcome::Zero, Outcome::One};

constexpr char axis_name(Axis axis) {
    return "xyz"[static_cast<int>(axis)];
}

constexpr int bit(Outcome outcome) {
    return static_cast<int>(outcome);
}

/// Pure state of `Qubits` qubits stored as amplitudes plus the squared
/// modulus of a global prefactor:
///
///     |s> = sqrt(scale2) * sum_b amps[b] |b>
///
/// Basis index b is the bit string read most-significant first, so for three
/// qubits amps[4*i + 2*j + k] = a_ijk. Irrational prefactors such as 1/sqrt(3)
/// are carried exactly through `scale2`. Storage does not require
/// normalization but the all-zero vector is rejected.
template <Backend B, size_t Qubits>
class PureState {
   public:
    static_assert(Qubits == 2 || Qubits == 3);
    static constexpr size_t num_qubits = Qubits;
    static constexpr size_t dimension = size_t{1} << Qubits;

    using backend = B;
    using scalar_type = typename B::scalar_type;
    using real_type = typename B::real_type;
    using amplitudes = std::array<scalar_type, dimension>;

    explicit PureState(amplitudes amps, real_type scale2 = real_type(1))
        : amps_(std::move(amps)), scale2_(std::move(scale2)) {
        if (!B::is_positive(scale2_)) {
            throw Error(ErrorCode::NonPositiveScale, "scale2 must be strictly positive");
        }
        bool any = false;
        for (const auto &a : amps_) {
            any |= !B::is_zero(a);
        }
        if (!any) {
            throw Error(ErrorCode::ZeroState, "all amplitudes are zero");
        }
    }

    const amplitudes &amps() const {
        return amps_;
    }
    const real_type &scale2() const {
        return scale2_;
    }
    const scalar_type &amp(size_t index) const {
        return amps_[index];
    }
    const scalar_type &operator()(int i, int j) const requires(Qubits == 2) {
        return amps_[2 * i + j];
    }
    const scalar_type &operator()(int i, int j, int k) const requires(Qubits == 3) {
        return amps_[4 * i + 2 * j + k];
    }

    /// Sum of squared amplitude moduli, without the prefactor.
    real_type amp_norm2() const {
        real_type total(0);
        for (const auto &a : amps_) {
            total += B::abs2(a);
        }
        return total;
    }

    /// scale2 * sum |a|^2; equals 1 iff the state is normalized.
    real_type norm2() const {
        return real_type(scale2_ * amp_norm2());
    }

    friend bool operator==(const PureState &a, const PureState &b) {
        return a.amps_ == b.amps_ && a.scale2_ == b.scale2_;
    }

   private:
    amplitudes amps_;
    real_type scale2_;
};

template <Backend B>
using TripartiteState = PureState<B, 3>;
template <Backend B>
using BipartiteState = PureState<B, 2>;

template <Backend B, size_t N>
typename B::real_type norm2(const PureState<B, N> &s) {
    return s.norm2();
}

/// Multiplies every amplitude by k; norm2 scales by |k|^2.
template <Backend B, size_t N>
PureState<B, N> scale(const PureState<B, N> &s, const typename B::scalar_type &k) {
    if (B::is_zero(k)) {
        throw Error(ErrorCode::ZeroScale, "scale factor must be nonzero");
    }
    auto amps = s.amps();
    for (auto &a : amps) {
        a = a * k;
    }
    return PureState<B, N>(std::move(amps), s.scale2());
}

/// Explicit exact -> floating conversion. There is no way back.
template <size_t N>
PureState<Approx, N> to_approx(const PureState<Exact, N> &s) {
    typename PureState<Approx, N>::amplitudes amps;
    for (size_t b = 0; b < amps.size(); b++) {
        amps[b] = to_approx(s.amp(b));
    }
    return PureState<Approx, N>(amps, s.scale2().get_d());
}

/// Scales a floating state so that norm2 = 1 with scale2 = 1.
template <size_t N>
PureState<Approx, N> normalized(const PureState<Approx, N> &s) {
    double f = std::sqrt(s.scale2() / s.norm2());
    auto amps = s.amps();
    for (auto &a : amps) {
        a *= f;
    }
    return PureState<Approx, N>(amps, 1.0);
}

/// Basis label such as "010".
inline std::string basis_label(size_t index, size_t qubits) {
    std::string out(qubits, '0');
    for (size_t q = 0; q < qubits; q++) {
        if ((index >> (qubits - 1 - q)) & 1) {
            out[q] = '1';
        }
    }
    return out;
}

}  // namespace triqubit
