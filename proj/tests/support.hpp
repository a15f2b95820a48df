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

// Test-only helpers and oracles. Nothing here calls the library routine it
// is used to check.

#include <array>
#include <complex>
#include <random>
#include <string>

#include "triqubit/triqubit.hpp"

namespace triqubit::testing {

inline GaussianRational gq(long p, long q = 1, long ip = 0, long iq = 1) {
    Rational re(p, q);
    Rational im(ip, iq);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

inline TripartiteState<Exact> tri(const std::string &expr) {
    return std::get<TripartiteState<Exact>>(parse_state(expr));
}

inline BipartiteState<Exact> bi(const std::string &expr) {
    return std::get<BipartiteState<Exact>>(parse_state(expr));
}

/// Hyperdeterminant by full epsilon contraction:
///   Det = -1/2 sum eps(i1 i2) eps(i3 i4) eps(j1 j2) eps(j3 j4) eps(k1 k3) eps(k2 k4)
///               a(i1 j1 k1) a(i2 j2 k2) a(i3 j3 k3) a(i4 j4 k4)
/// Returned doubled (the sum itself, negated) so integer inputs stay integral.
template <typename S>
S epsilon_det_times_two(const std::array<S, 8> &a) {
    auto eps = [](int p, int q) { return p == q ? 0 : (p < q ? 1 : -1); };
    auto at = [&](int i, int j, int k) { return a[4 * i + 2 * j + k]; };
    S sum(0);
    for (int idx = 0; idx < 4096; idx++) {
        int v[12];
        for (int n = 0; n < 12; n++) {
            v[n] = (idx >> n) & 1;
        }
        auto [i1, i2, i3, i4, j1, j2, j3, j4, k1, k2, k3, k4] =
            std::array<int, 12>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11]};
        int sign = eps(i1, i2) * eps(i3, i4) * eps(j1, j2) * eps(j3, j4) * eps(k1, k3) * eps(k2, k4);
        if (sign == 0) {
            continue;
        }
        S term = at(i1, j1, k1) * at(i2, j2, k2) * at(i3, j3, k3) * at(i4, j4, k4);
        if (sign > 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

/// Unit-norm floating state with complex normal amplitudes.
template <typename Rng>
TripartiteState<Approx> random_normalized(Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    TripartiteState<Approx>::amplitudes amps;
    for (auto &a : amps) {
        a = {n(rng), n(rng)};
    }
    return normalized(TripartiteState<Approx>(amps));
}

template <typename Rng>
BipartiteState<Approx> random_normalized_pair(Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    BipartiteState<Approx>::amplitudes amps;
    for (auto &a : amps) {
        a = {n(rng), n(rng)};
    }
    return normalized(BipartiteState<Approx>(amps));
}

/// Plain 2x2 determinant, written out independently of the library.
template <typename S>
S minor2(const S &a, const S &b, const S &c, const S &d) {
    return a * d - b * c;
}

}  // namespace triqubit::testing
