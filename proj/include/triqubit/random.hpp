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
#include <optional>
#include <random>
#include <string_view>

#include "triqubit/local_unitary.hpp"
#include "triqubit/separability.hpp"

namespace triqubit {

/// Families for randomized testing. Generic sampling almost never lands on
/// the measure-zero separable set, so the mixed pool plants structure.
enum class StateKind {
    Product,    // x (x) y (x) z, components may be zero
    Generic,    // independent random amplitudes
    Sparse,     // generic with 1..6 amplitudes forced to zero
    Case3,      // random multiples of the four two-term case-3 supports
    WLike,      // random weights on |001>, |010>, |100>
    LuProduct,  // product state under random local unitaries (floating only)
    Mixed,      // 30% Product, 30% Generic, 20% Sparse, 10% Case3, 10% WLike/LuProduct
};

inline constexpr std::array<std::pair<std::string_view, StateKind>, 7> kStateKindNames = {{
    {"product", StateKind::Product},
    {"generic", StateKind::Generic},
    {"sparse", StateKind::Sparse},
    {"case3", StateKind::Case3},
    {"wlike", StateKind::WLike},
    {"lu-product", StateKind::LuProduct},
    {"mixed", StateKind::Mixed},
}};

inline std::optional<StateKind> parse_state_kind(std::string_view name) {
    for (auto [n, k] : kStateKindNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

inline std::string_view state_kind_name(StateKind kind) {
    for (auto [n, k] : kStateKindNames) {
        if (k == kind) {
            return n;
        }
    }
    return "?";
}

namespace detail {

template <typename Rng>
GaussianRational random_gaussian_rational(Rng &rng, bool allow_zero) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::bernoulli_distribution complex_part(0.5);
    while (true) {
        GaussianRational z(Rational(num(rng), den(rng)));
        if (complex_part(rng)) {
            z.im = Rational(num(rng), den(rng));
        }
        z.re.canonicalize();
        z.im.canonicalize();
        if (allow_zero || !z.is_zero()) {
            return z;
        }
    }
}

template <typename Rng>
std::complex<double> random_complex(Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

template <Backend B, typename Rng>
typename B::scalar_type random_scalar(Rng &rng, bool allow_zero) {
    if constexpr (std::is_same_v<B, Exact>) {
        return random_gaussian_rational(rng, allow_zero);
    } else {
        return random_complex(rng);
    }
}

// A random nonzero 2-vector; with probability 1/4 one component is zero.
template <Backend B, typename Rng>
std::array<typename B::scalar_type, 2> random_qubit(Rng &rng) {
    using S = typename B::scalar_type;
    std::uniform_int_distribution<int> pick(0, 7);
    int r = pick(rng);
    if (r == 0) {
        return {S(0), random_scalar<B>(rng, false)};
    }
    if (r == 1) {
        return {random_scalar<B>(rng, false), S(0)};
    }
    return {random_scalar<B>(rng, false), random_scalar<B>(rng, false)};
}

template <Backend B, typename Rng>
typename B::real_type random_scale2(Rng &rng) {
    using R = typename B::real_type;
    std::uniform_int_distribution<int> d(1, 4);
    return R(1) / R(d(rng));
}

}  // namespace detail

template <Backend B, typename Rng>
TripartiteState<B> random_product_state(Rng &rng) {
    auto x = detail::random_qubit<B>(rng);
    auto y = detail::random_qubit<B>(rng);
    auto z = detail::random_qubit<B>(rng);
    typename TripartiteState<B>::amplitudes amps;
    for (size_t b = 0; b < 8; b++) {
        amps[b] = x[(b >> 2) & 1] * y[(b >> 1) & 1] * z[b & 1];
    }
    return TripartiteState<B>(amps, detail::random_scale2<B>(rng));
}

/// Draws one state of the requested family. Exact draws use small Gaussian
/// rationals (parts p/q, |p| <= 9, 1 <= q <= 5); floating draws use complex
/// normal amplitudes. LuProduct is floating only; under Exact it draws WLike.
template <Backend B, typename Rng>
TripartiteState<B> random_state(StateKind kind, Rng &rng) {
    using S = typename B::scalar_type;
    using Amps = typename TripartiteState<B>::amplitudes;

    if (kind == StateKind::Mixed) {
        std::uniform_int_distribution<int> pct(0, 99);
        int r = pct(rng);
        if (r < 30) {
            kind = StateKind::Product;
        } else if (r < 60) {
            kind = StateKind::Generic;
        } else if (r < 80) {
            kind = StateKind::Sparse;
        } else if (r < 90) {
            kind = StateKind::Case3;
        } else {
            kind = std::is_same_v<B, Exact> ? StateKind::WLike : StateKind::LuProduct;
        }
    }
    if constexpr (std::is_same_v<B, Exact>) {
        if (kind == StateKind::LuProduct) {
            kind = StateKind::WLike;
        }
    }

    switch (kind) {
        case StateKind::Product:
            return random_product_state<B>(rng);
        case StateKind::Generic: {
            while (true) {
                Amps amps;
                for (auto &a : amps) {
                    a = detail::random_scalar<B>(rng, true);
                }
                try {
                    return TripartiteState<B>(amps, detail::random_scale2<B>(rng));
                } catch (const Error &) {
                }
            }
        }
        case StateKind::Sparse: {
            std::uniform_int_distribution<int> zeros(1, 6);
            Amps amps;
            for (auto &a : amps) {
                a = detail::random_scalar<B>(rng, false);
            }
            std::array<int, 8> order = {0, 1, 2, 3, 4, 5, 6, 7};
            std::shuffle(order.begin(), order.end(), rng);
            int nz = zeros(rng);
            for (int n = 0; n < nz; n++) {
                amps[order[n]] = S(0);
            }
            return TripartiteState<B>(amps, detail::random_scale2<B>(rng));
        }
        case StateKind::Case3: {
            auto family = case3_states<B>();
            std::uniform_int_distribution<size_t> pick(0, family.size() - 1);
            const auto &base = family[pick(rng)];
            Amps amps = base.amps();
            for (auto &a : amps) {
                if (!B::is_zero(a)) {
                    a = detail::random_scalar<B>(rng, false);
                }
            }
            return TripartiteState<B>(amps, detail::random_scale2<B>(rng));
        }
        case StateKind::WLike: {
            Amps amps;
            for (auto &a : amps) {
                a = S(0);
            }
            while (true) {
                for (size_t b : {0b001, 0b010, 0b100}) {
                    amps[b] = detail::random_scalar<B>(rng, true);
                }
                if (!B::is_zero(amps[1]) || !B::is_zero(amps[2]) || !B::is_zero(amps[4])) {
                    return TripartiteState<B>(amps, detail::random_scale2<B>(rng));
                }
            }
        }
        case StateKind::LuProduct:
            if constexpr (std::is_same_v<B, Approx>) {
                auto s = random_product_state<Approx>(rng);
                auto u1 = random_unitary2(rng);
                auto u2 = random_unitary2(rng);
                auto u3 = random_unitary2(rng);
                return apply_local_3(s, u1, u2, u3);
            }
            break;
        case StateKind::Mixed:
            break;
    }
    throw Error(ErrorCode::InvalidInput, "unsupported state kind");
}

}  // namespace triqubit
