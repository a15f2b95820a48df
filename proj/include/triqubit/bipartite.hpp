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

#include "triqubit/state.hpp"

namespace triqubit {

/// c00*c11 - c01*c10 of a row-major 2x2 coefficient block.
template <typename S>
S det2(const std::array<S, 4> &c) {
    return c[0] * c[3] - c[1] * c[2];
}

/// Determinant of the amplitude matrix. The determinant of the scaled
/// matrix is scale2 * det2 up to a phase, since det is degree 2.
template <Backend B>
typename B::scalar_type det2(const BipartiteState<B> &c) {
    return det2(c.amps());
}

/// Squared concurrence C^2 = 4 |det c|^2 of the normalized state, i.e.
/// 4 scale2^2 |det2(amps)|^2 / norm2^2. Rational in exact mode.
template <Backend B>
typename B::real_type concurrence2(const BipartiteState<B> &c) {
    using R = typename B::real_type;
    R n2 = c.norm2();
    return R(4 * c.scale2() * c.scale2() * B::abs2(det2(c)) / (n2 * n2));
}

/// Concurrence 2|det c| of the normalized state, in [0, 1].
template <Backend B>
double concurrence(const BipartiteState<B> &c) {
    return std::sqrt(B::to_double(concurrence2(c)));
}

/// Product-state test: det c = 0 exactly, or |det c|^2 <= eps for the
/// normalized floating state.
template <Backend B>
bool is_separable_bipartite(const BipartiteState<B> &c, const Tolerance &tol = {}) {
    using R = typename B::real_type;
    R n2 = c.norm2();
    R det_abs2 = c.scale2() * c.scale2() * B::abs2(det2(c)) / (n2 * n2);
    return B::is_zero(det_abs2, tol);
}

}  // namespace triqubit
