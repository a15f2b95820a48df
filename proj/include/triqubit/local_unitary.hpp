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
#include <complex>
#include <numbers>
#include <random>

#include "triqubit/state.hpp"

namespace triqubit {

/// 2x2 unitary sqrt(scale2) * M with M stored row-major (m00, m01, m10, m11).
///
/// Action on coefficients follows c'_{kr} = sum_ij c_ij (U1)_ik (U2)_jr: the
/// row index of each factor is the source basis index. Under this convention
/// U (x) U (x) U with U = [[1, 1], [-1, 1]] / sqrt(2) sends
/// (|000> + |111>)/sqrt(2) to (|001> + |010> + |100> + |111>)/2.
template <Backend B>
class Unitary2 {
   public:
    using scalar_type = typename B::scalar_type;
    using real_type = typename B::real_type;
    using entries = std::array<scalar_type, 4>;

    static constexpr double kApproxResidual = 1e-12;

    explicit Unitary2(entries m, real_type scale2 = real_type(1)) : m_(std::move(m)), scale2_(std::move(scale2)) {
        if (!B::is_positive(scale2_)) {
            throw Error(ErrorCode::NonPositiveScale, "unitary scale2 must be strictly positive");
        }
        if (residual() > 0) {
            throw Error(ErrorCode::NotUnitary, "matrix is not unitary");
        }
    }

    static Unitary2 identity() {
        return Unitary2({scalar_type(1), scalar_type(0), scalar_type(0), scalar_type(1)});
    }

    const entries &m() const {
        return m_;
    }
    const real_type &scale2() const {
        return scale2_;
    }
    const scalar_type &operator()(int r, int c) const {
        return m_[2 * r + c];
    }

    /// Conjugate transpose; the inverse.
    Unitary2 dagger() const {
        return Unitary2({B::conj(m_[0]), B::conj(m_[2]), B::conj(m_[1]), B::conj(m_[3])}, scale2_);
    }

    /// Determinant of sqrt(scale2) * M.
    scalar_type det() const {
        return (m_[0] * m_[3] - m_[1] * m_[2]) * B::from_real(scale2_);
    }

    /// max |scale2 * (M^dagger M) - I| entry. The exact backend reports 0 or 1.
    double unitarity_residual() const {
        return raw_residual();
    }

   private:
    double raw_residual() const {
        double worst = 0;
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                scalar_type g = B::conj(m_[r]) * m_[c] + B::conj(m_[2 + r]) * m_[2 + c];
                scalar_type want = scalar_type(r == c ? 1 : 0);
                scalar_type diff = g * B::from_real(scale2_) - want;
                if constexpr (std::is_same_v<B, Exact>) {
                    if (!diff.is_zero()) {
                        worst = 1;
                    }
                } else {
                    worst = std::max(worst, std::abs(diff));
                }
            }
        }
        return worst;
    }

    double residual() const {
        double r = raw_residual();
        if constexpr (std::is_same_v<B, Exact>) {
            return r;
        } else {
            return r <= kApproxResidual ? 0 : r;
        }
    }

    entries m_;
    real_type scale2_;
};

namespace detail {

// out[p] = sum_i u(i, p) in[i] along one tensor slot of stride `stride`.
template <Backend B, size_t D>
std::array<typename B::scalar_type, D> apply_slot(const std::array<typename B::scalar_type, D> &in,
                                                  const Unitary2<B> &u, size_t stride) {
    std::array<typename B::scalar_type, D> out;
    for (size_t b = 0; b < D; b++) {
        if (b & stride) {
            continue;
        }
        const auto &v0 = in[b];
        const auto &v1 = in[b | stride];
        out[b] = u(0, 0) * v0 + u(1, 0) * v1;
        out[b | stride] = u(0, 1) * v0 + u(1, 1) * v1;
    }
    return out;
}

}  // namespace detail

/// a'_{pqr} = sum_{ijk} (u1)_{ip} (u2)_{jq} (u3)_{kr} a_{ijk}. Prefactors
/// multiply, so norm2 is preserved.
template <Backend B>
TripartiteState<B> apply_local_3(const TripartiteState<B> &s, const Unitary2<B> &u1, const Unitary2<B> &u2,
                                 const Unitary2<B> &u3) {
    auto amps = detail::apply_slot<B, 8>(s.amps(), u1, 4);
    amps = detail::apply_slot<B, 8>(amps, u2, 2);
    amps = detail::apply_slot<B, 8>(amps, u3, 1);
    return TripartiteState<B>(amps, s.scale2() * u1.scale2() * u2.scale2() * u3.scale2());
}

/// c' = U1^T c U2 on the coefficient matrix.
template <Backend B>
BipartiteState<B> apply_local_2(const BipartiteState<B> &c, const Unitary2<B> &u1, const Unitary2<B> &u2) {
    auto amps = detail::apply_slot<B, 4>(c.amps(), u1, 2);
    amps = detail::apply_slot<B, 4>(amps, u2, 1);
    return BipartiteState<B>(amps, c.scale2() * u1.scale2() * u2.scale2());
}

/// Haar-distributed element of U(2):
///
///     e^{i phi} [[ e^{i a} cos t,   e^{i b} sin t ],
///                [-e^{-i b} sin t,  e^{-i a} cos t ]],   t = asin(sqrt(u)).
template <typename Rng>
Unitary2<Approx> random_unitary2(Rng &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double a = angle(rng);
    double b = angle(rng);
    double phi = angle(rng);
    double t = std::asin(std::sqrt(unit(rng)));
    auto e = [](double x) { return std::polar(1.0, x); };
    std::complex<double> g = e(phi);
    return Unitary2<Approx>({
        g * e(a) * std::cos(t),
        g * e(b) * std::sin(t),
        -g * e(-b) * std::sin(t),
        g * e(-a) * std::cos(t),
    });
}

/// (1/sqrt 2) [[1, 1], [-1, 1]], exact.
inline Unitary2<Exact> ghz_psi_unitary() {
    return Unitary2<Exact>({GaussianRational(1), GaussianRational(1), GaussianRational(-1), GaussianRational(1)},
                           Rational(1, 2));
}

inline Unitary2<Approx> to_approx(const Unitary2<Exact> &u) {
    double f = std::sqrt(u.scale2().get_d());
    return Unitary2<Approx>({to_approx(u.m()[0]) * f, to_approx(u.m()[1]) * f, to_approx(u.m()[2]) * f,
                             to_approx(u.m()[3]) * f});
}

}  // namespace triqubit
