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

#include <string>

#include "triqubit/bipartite.hpp"
#include "triqubit/cayley.hpp"

namespace triqubit {

template <Backend B>
struct CollapseResult {
    using real_type = typename B::real_type;

    real_type probability;
    /// Unnormalized residual pair; its amplitudes are the submatrix block.
    BipartiteState<B> post_state;
    /// Squared concurrence of the normalized residual.
    real_type post_concurrence2;

    double post_concurrence() const {
        return std::sqrt(B::to_double(post_concurrence2));
    }
};

/// Projective computational-basis measurement of one qubit. Throws
/// ImpossibleOutcome when the outcome has zero probability (exactly, or
/// <= eps for floating states).
template <Backend B>
CollapseResult<B> collapse(const TripartiteState<B> &s, Axis axis, Outcome outcome, const Tolerance &tol = {}) {
    using R = typename B::real_type;
    auto block = slice(s, axis, outcome);
    R mass(0);
    for (const auto &a : block) {
        mass += B::abs2(a);
    }
    R probability = s.scale2() * mass / s.norm2();
    if (B::is_zero(probability, tol) || mass == R(0)) {
        throw Error(ErrorCode::ImpossibleOutcome, std::string("qubit ") + axis_name(axis) + " cannot yield " +
                                                      std::to_string(bit(outcome)));
    }
    BipartiteState<B> post(block, s.scale2());
    R c2 = concurrence2(post);
    return CollapseResult<B>{std::move(probability), std::move(post), std::move(c2)};
}

}  // namespace triqubit
