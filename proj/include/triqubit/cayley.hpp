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

#include <algorithm>
#include <array>
#include <cmath>

#include "triqubit/bipartite.hpp"
#include "triqubit/state.hpp"

namespace triqubit {

/// The 2x2 block of a_ijk obtained by fixing one index. Rows run over the
/// first free index and columns over the second:
///
///     X fixed: (a_{o j k})   Y fixed: (a_{i o k})   Z fixed: (a_{i j o})
///
/// The block may be all zero, which is why this returns raw amplitudes.
template <Backend B>
std::array<typename B::scalar_type, 4> slice(const TripartiteState<B> &s, Axis axis, Outcome outcome) {
    int o = bit(outcome);
    std::array<typename B::scalar_type, 4> out;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            switch (axis) {
                case Axis::X:
                    out[2 * r + c] = s(o, r, c);
                    break;
                case Axis::Y:
                    out[2 * r + c] = s(r, o, c);
                    break;
                case Axis::Z:
                    out[2 * r + c] = s(r, c, o);
                    break;
            }
        }
    }
    return out;
}

/// Submatrix A_{axis,outcome} as a bipartite state with scale2 propagated.
/// Throws ZeroState when the block vanishes (e.g. |000> with X fixed to 1).
template <Backend B>
BipartiteState<B> submatrix(const TripartiteState<B> &s, Axis axis, Outcome outcome) {
    return BipartiteState<B>(slice(s, axis, outcome), s.scale2());
}

/// Cayley hyperdeterminant of the amplitude hypermatrix, normalized so that
/// a_000 = a_111 = 1 (GHZ amplitudes) gives +1. Degree 4: the value for the
/// scaled state is scale2^2 times this, up to a phase.
template <Backend B>
typename B::scalar_type cayley_det(const TripartiteState<B> &s) {
    const auto &a000 = s(0, 0, 0);
    const auto &a001 = s(0, 0, 1);
    const auto &a010 = s(0, 1, 0);
    const auto &a011 = s(0, 1, 1);
    const auto &a100 = s(1, 0, 0);
    const auto &a101 = s(1, 0, 1);
    const auto &a110 = s(1, 1, 0);
    const auto &a111 = s(1, 1, 1);

    auto squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                   a100 * a100 * a011 * a011;
    auto pairs = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a011 * a100 * a111 +
                 a001 * a010 * a101 * a110 + a001 * a011 * a100 * a110 + a010 * a011 * a101 * a100;
    auto quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;

    using S = typename B::scalar_type;
    return squares - S(2) * pairs + S(4) * quads;
}

/// Hyperdeterminant evaluated independently as the discriminant of the
/// binary quadratic q(z0, z1) = det(z0 A_z0 + z1 A_z1) = al z0^2 + be z0 z1 + ga z1^2.
template <Backend B>
typename B::scalar_type cayley_det_schlafli(const TripartiteState<B> &s) {
    using S = typename B::scalar_type;
    auto m0 = slice(s, Axis::Z, Outcome::Zero);
    auto m1 = slice(s, Axis::Z, Outcome::One);
    S al = det2(m0);
    S ga = det2(m1);
    // Mixed term of det(z0 m0 + z1 m1).
    S be = m0[0] * m1[3] + m1[0] * m0[3] - m0[1] * m1[2] - m1[1] * m0[2];
    return be * be - S(4) * al * ga;
}

inline constexpr std::array<std::pair<Axis, Outcome>, 6> kSubOrder = {{
    {Axis::X, Outcome::Zero},
    {Axis::X, Outcome::One},
    {Axis::Y, Outcome::Zero},
    {Axis::Y, Outcome::One},
    {Axis::Z, Outcome::Zero},
    {Axis::Z, Outcome::One},
}};

/// Squared sub-concurrences [C_x0^2, C_x1^2, C_y0^2, C_y1^2, C_z0^2, C_z1^2]
/// of the scaled (not normalized) state: C_ai^2 = scale2^2 |det A_ai|^2.
template <Backend B>
std::array<typename B::real_type, 6> sub_concurrences(const TripartiteState<B> &s) {
    using R = typename B::real_type;
    std::array<R, 6> out;
    R s2 = s.scale2() * s.scale2();
    for (size_t n = 0; n < kSubOrder.size(); n++) {
        auto [axis, outcome] = kSubOrder[n];
        out[n] = s2 * B::abs2(det2(slice(s, axis, outcome)));
    }
    return out;
}

/// [|Det A|^2; C_x0^2, C_x1^2, C_y0^2, C_y1^2, C_z0^2, C_z1^2]. Squared moduli
/// keep exact mode rational.
template <Backend B>
struct ClassificationVector {
    using real_type = typename B::real_type;

    real_type det_abs2;
    std::array<real_type, 6> sub2;
    bool computed_on_normalized = true;

    bool all_zero(const Tolerance &tol = {}) const {
        if (!B::is_zero(det_abs2, tol)) {
            return false;
        }
        return std::all_of(sub2.begin(), sub2.end(), [&](const real_type &v) { return B::is_zero(v, tol); });
    }

    friend bool operator==(const ClassificationVector &, const ClassificationVector &) = default;
};

/// Classification list of the normalized state: degree-4 |Det| divided by
/// norm2^2, degree-2 C values divided by norm2.
template <Backend B>
ClassificationVector<B> classify(const TripartiteState<B> &s) {
    using R = typename B::real_type;
    R n2 = s.norm2();
    R n4 = n2 * n2;
    R s4 = s.scale2() * s.scale2() * s.scale2() * s.scale2();

    ClassificationVector<B> v;
    v.det_abs2 = s4 * B::abs2(cayley_det(s)) / (n4 * n4);
    v.sub2 = sub_concurrences(s);
    for (auto &c : v.sub2) {
        c /= n4;
    }
    v.computed_on_normalized = true;
    return v;
}

/// Seven moduli rescaled for presentation. Divisor is |Det| when it is
/// nonzero, otherwise the largest C, otherwise 1.
struct DisplayVector {
    std::array<double, 7> values{};

    double det() const {
        return values[0];
    }
    friend bool operator==(const DisplayVector &, const DisplayVector &) = default;
};

template <Backend B>
DisplayVector display_normalize(const ClassificationVector<B> &v, const Tolerance &tol = {}) {
    using R = typename B::real_type;
    R divisor2(1);
    if (!B::is_zero(v.det_abs2, tol)) {
        divisor2 = v.det_abs2;
    } else {
        R best(0);
        bool any = false;
        for (const auto &c : v.sub2) {
            if (!B::is_zero(c, tol) && c > best) {
                best = c;
                any = true;
            }
        }
        if (any) {
            divisor2 = best;
        }
    }

    // Ratios are formed on squares, so exact inputs give exact 0 and 1 entries.
    auto entry = [&](const R &x2) -> double {
        if (B::is_zero(x2, tol)) {
            return 0.0;
        }
        return std::sqrt(B::to_double(R(x2 / divisor2)));
    };
    DisplayVector d;
    d.values[0] = entry(v.det_abs2);
    for (size_t n = 0; n < 6; n++) {
        d.values[n + 1] = entry(v.sub2[n]);
    }
    return d;
}

/// Swaps the roles of qubit positions: result(p(i,j,k)) where p permutes the
/// index triple by `perm` (perm[n] = source position of output position n).
template <Backend B>
TripartiteState<B> permute_qubits(const TripartiteState<B> &s, std::array<int, 3> perm) {
    typename TripartiteState<B>::amplitudes out;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                std::array<int, 3> src = {i, j, k};
                std::array<int, 3> dst = {src[perm[0]], src[perm[1]], src[perm[2]]};
                out[4 * dst[0] + 2 * dst[1] + dst[2]] = s(i, j, k);
            }
        }
    }
    return TripartiteState<B>(out, s.scale2());
}

}  // namespace triqubit
