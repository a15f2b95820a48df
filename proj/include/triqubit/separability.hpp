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
#include <cmath>
#include <vector>

#include "triqubit/cayley.hpp"

namespace triqubit {

/// Full separability: |Det|^2 and all six C^2 vanish (exactly, or <= eps on
/// the normalized floating state).
template <Backend B>
bool is_separable(const TripartiteState<B> &s, const Tolerance &tol = {}) {
    return classify(s).all_zero(tol);
}

/// One-qubit factors with amps(i, j, k) = fx[i] * fy[j] * fz[k]; the state is
/// sqrt(scale2) * fx (x) fy (x) fz.
template <Backend B>
struct Factorization {
    using scalar_type = typename B::scalar_type;

    std::array<scalar_type, 2> fx;
    std::array<scalar_type, 2> fy;
    std::array<scalar_type, 2> fz;
    typename B::real_type scale2;

    scalar_type product(int i, int j, int k) const {
        return fx[i] * fy[j] * fz[k];
    }
};

inline constexpr double kFactorResidual = 1e-9;

/// Max |a_ijk - fx_i fy_j fz_k| relative to the largest amplitude modulus.
/// Exactly 0 for a correct exact factorization.
template <Backend B>
double factor_residual(const TripartiteState<B> &s, const Factorization<B> &f) {
    double worst = 0;
    double largest = 0;
    for (size_t b = 0; b < 8; b++) {
        int i = (b >> 2) & 1, j = (b >> 1) & 1, k = b & 1;
        auto diff = s.amp(b) - f.product(i, j, k);
        worst = std::max(worst, std::sqrt(B::to_double(B::abs2(diff))));
        largest = std::max(largest, std::sqrt(B::to_double(B::abs2(s.amp(b)))));
    }
    return worst / largest;
}

/// Anchor-division factorization of a separable state. Picks the largest
/// amplitude a_{IJK} and sets fx_i = a_{iJK}, fy_j = a_{IjK}/a_{IJK},
/// fz_k = a_{IJk}/a_{IJK}, then checks all eight products.
template <Backend B>
Factorization<B> extract_factors(const TripartiteState<B> &s, const Tolerance &tol = {}) {
    if (!is_separable(s, tol)) {
        throw Error(ErrorCode::NotSeparable, "state is entangled; no product factorization exists");
    }
    size_t anchor = 0;
    for (size_t b = 1; b < 8; b++) {
        if (B::abs2(s.amp(b)) > B::abs2(s.amp(anchor))) {
            anchor = b;
        }
    }
    int I = (anchor >> 2) & 1, J = (anchor >> 1) & 1, K = anchor & 1;
    const auto &pivot = s(I, J, K);

    Factorization<B> f{{}, {}, {}, s.scale2()};
    for (int n = 0; n < 2; n++) {
        f.fx[n] = s(n, J, K);
        f.fy[n] = s(I, n, K) / pivot;
        f.fz[n] = s(I, J, n) / pivot;
    }

    double residual = factor_residual(s, f);
    bool ok = std::is_same_v<B, Exact> ? residual == 0 : residual <= kFactorResidual;
    if (!ok) {
        throw Error(ErrorCode::ResidualNonzero,
                    "factor product does not reproduce the amplitudes (residual " + std::to_string(residual) + ")");
    }
    return f;
}

/// Rank-1 test by brute force: flatten the hypermatrix along each axis into a
/// 2x4 matrix and require all 18 2x2 minors to vanish. Shares no code with
/// the hyperdeterminant path.
template <Backend B>
bool rank1_oracle(const TripartiteState<B> &s, const Tolerance &tol = {}) {
    using S = typename B::scalar_type;
    using R = typename B::real_type;
    R n2 = s.norm2();
    R s2 = s.scale2() * s.scale2();
    for (int axis = 0; axis < 3; axis++) {
        std::array<std::array<S, 4>, 2> flat;
        for (size_t b = 0; b < 8; b++) {
            int bits[3] = {int(b >> 2) & 1, int(b >> 1) & 1, int(b) & 1};
            int row = bits[axis];
            int col = 0;
            for (int q = 0; q < 3; q++) {
                if (q != axis) {
                    col = 2 * col + bits[q];
                }
            }
            flat[row][col] = s.amp(b);
        }
        for (int c0 = 0; c0 < 4; c0++) {
            for (int c1 = c0 + 1; c1 < 4; c1++) {
                S minor = flat[0][c0] * flat[1][c1] - flat[0][c1] * flat[1][c0];
                R m2 = s2 * B::abs2(minor) / (n2 * n2);
                if (!B::is_zero(m2, tol)) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// The four two-term states whose six sub-determinants all vanish while Det
/// does not: |000>+|111>, |010>+|101>, |110>+|001>, |100>+|011>, each with
/// scale2 = 1/2.
template <Backend B = Exact>
std::vector<TripartiteState<B>> case3_states() {
    using S = typename B::scalar_type;
    using R = typename B::real_type;
    const std::array<std::pair<int, int>, 4> supports = {{{0b000, 0b111}, {0b010, 0b101}, {0b110, 0b001}, {0b100, 0b011}}};
    std::vector<TripartiteState<B>> out;
    for (auto [p, q] : supports) {
        typename TripartiteState<B>::amplitudes amps{};
        for (auto &a : amps) {
            a = S(0);
        }
        amps[p] = S(1);
        amps[q] = S(1);
        out.emplace_back(amps, R(1) / R(2));
    }
    return out;
}

}  // namespace triqubit
