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


#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace triqubit {
namespace {

using testing::gq;
using testing::tri;

const auto kGhz = "(|000> + |111>)/sqrt(2)";
const auto kW = "1/sqrt(3)(|001>+|100>+|010>)";

// Product state built from known factors; the factors are the ground truth.
struct Planted {
    std::array<GaussianRational, 2> x, y, z;
    TripartiteState<Exact> state;
};

template <typename Rng>
Planted planted_product(Rng &rng) {
    auto x = detail::random_qubit<Exact>(rng);
    auto y = detail::random_qubit<Exact>(rng);
    auto z = detail::random_qubit<Exact>(rng);
    TripartiteState<Exact>::amplitudes amps;
    for (int b = 0; b < 8; b++) {
        amps[b] = x[(b >> 2) & 1] * y[(b >> 1) & 1] * z[b & 1];
    }
    return {x, y, z, TripartiteState<Exact>(amps, Rational(1, 3))};
}

// u and v are parallel as 2-vectors.
bool parallel(const std::array<GaussianRational, 2> &u, const std::array<GaussianRational, 2> &v) {
    return (u[0] * v[1] - u[1] * v[0]).is_zero();
}

TEST(IsSeparable, KnownValues) {
    std::mt19937_64 rng(61);
    for (int n = 0; n < 200; n++) {
        EXPECT_TRUE(is_separable(planted_product(rng).state));
    }
    auto w = classify(tri(kW));
    EXPECT_FALSE(is_separable(tri(kW)));
    EXPECT_EQ(w.det_abs2, 0);
    EXPECT_GT(w.sub2[0], 0);
    auto g = classify(tri(kGhz));
    EXPECT_FALSE(is_separable(tri(kGhz)));
    EXPECT_GT(g.det_abs2, 0);
}

TEST(ExtractFactors, BasisState) {
    auto f = extract_factors(tri("|000>"));
    EXPECT_EQ(f.fx, (std::array<GaussianRational, 2>{gq(1), gq(0)}));
    EXPECT_EQ(f.fy, (std::array<GaussianRational, 2>{gq(1), gq(0)}));
    EXPECT_EQ(f.fz, (std::array<GaussianRational, 2>{gq(1), gq(0)}));
}

TEST(ExtractFactors, ConstructedProduct) {
    // (|0>+|1>) (x) (|0>-|1>) (x) |1>
    auto f = extract_factors(tri("|001> - |011> + |101> - |111>"));
    EXPECT_TRUE(parallel(f.fx, {gq(1), gq(1)}));
    EXPECT_TRUE(parallel(f.fy, {gq(1), gq(-1)}));
    EXPECT_TRUE(parallel(f.fz, {gq(0), gq(1)}));
}

TEST(ExtractFactors, RecoversPlantedFactorsWithZeroResidual) {
    std::mt19937_64 rng(67);
    for (int n = 0; n < 10000; n++) {
        auto p = planted_product(rng);
        auto f = extract_factors(p.state);
        ASSERT_EQ(factor_residual(p.state, f), 0.0);
        ASSERT_TRUE(parallel(f.fx, p.x));
        ASSERT_TRUE(parallel(f.fy, p.y));
        ASSERT_TRUE(parallel(f.fz, p.z));
        for (int b = 0; b < 8; b++) {
            ASSERT_EQ(f.product((b >> 2) & 1, (b >> 1) & 1, b & 1), p.state.amp(b));
        }
        ASSERT_EQ(f.scale2, p.state.scale2());
    }
}

TEST(ExtractFactors, RejectsEntangledStates) {
    for (const char *e : {kGhz, kW, "|000> + |011>"}) {
        try {
            extract_factors(tri(e));
            FAIL() << e;
        } catch (const Error &err) {
            EXPECT_EQ(err.code(), ErrorCode::NotSeparable) << e;
        }
    }
}

TEST(ExtractFactors, ApproxResidualWithinTolerance) {
    std::mt19937_64 rng(71);
    for (int n = 0; n < 2000; n++) {
        auto s = normalized(random_state<Approx>(StateKind::LuProduct, rng));
        ASSERT_TRUE(is_separable(s));
        auto f = extract_factors(s);
        ASSERT_LE(factor_residual(s, f), kFactorResidual);
    }
}

TEST(Rank1Oracle, KnownValues) {
    std::mt19937_64 rng(73);
    for (int n = 0; n < 200; n++) {
        EXPECT_TRUE(rank1_oracle(planted_product(rng).state));
    }
    EXPECT_FALSE(rank1_oracle(tri(kGhz)));
    EXPECT_FALSE(rank1_oracle(tri(kW)));
}

TEST(Case3, FamilyHasZeroSubConcurrencesButNonzeroDet) {
    auto family = case3_states();
    ASSERT_EQ(family.size(), 4u);
    for (const auto &s : family) {
        auto v = classify(s);
        for (const auto &c : v.sub2) {
            EXPECT_EQ(c, 0);
        }
        EXPECT_GT(v.det_abs2, 0);
        EXPECT_FALSE(is_separable(s));
        EXPECT_FALSE(rank1_oracle(s));
        EXPECT_EQ(norm2(s), 1);
    }
    EXPECT_EQ(family[0], tri(kGhz));
    EXPECT_EQ(classify(family[0]), classify(tri(kGhz)));
}

TEST(Case3, SupportsMatchTheFourProducts) {
    // x0y0z0+x1y1z1, x0y1z0+x1y0z1, x1y1z0+x0y0z1, x1y0z0+x0y1z1
    const std::array<const char *, 4> exprs = {"|000>+|111>", "|010>+|101>", "|110>+|001>", "|100>+|011>"};
    auto family = case3_states();
    for (size_t n = 0; n < 4; n++) {
        EXPECT_EQ(render(family[n]), render(tri(std::string("(") + exprs[n] + ")/sqrt(2)")));
    }
}

TEST(Equivalence, SevenZerosEquivalentToRankOneExact) {
    std::mt19937_64 rng(79);
    size_t separable = 0;
    for (int n = 0; n < 10000; n++) {
        auto s = random_state<Exact>(StateKind::Mixed, rng);
        bool sep = is_separable(s);
        ASSERT_EQ(sep, rank1_oracle(s)) << render(s);
        if (sep) {
            separable++;
            ASSERT_EQ(factor_residual(s, extract_factors(s)), 0.0);
        }
    }
    // The pool must exercise both sides.
    EXPECT_GT(separable, 2000u);
    EXPECT_LT(separable, 8000u);
}

TEST(Equivalence, NecessityOnProducts) {
    std::mt19937_64 rng(83);
    for (int n = 0; n < 2000; n++) {
        auto v = classify(random_product_state<Exact>(rng));
        ASSERT_EQ(v.det_abs2, 0);
        for (const auto &c : v.sub2) {
            ASSERT_EQ(c, 0);
        }
    }
}

TEST(Equivalence, ApproxBackendAgreesOnMixedPool) {
    std::mt19937_64 rng(89);
    for (int n = 0; n < 5000; n++) {
        auto s = normalized(random_state<Approx>(StateKind::Mixed, rng));
        ASSERT_EQ(is_separable(s), rank1_oracle(s));
    }
}

// With C_z0 = C_z1 = 0 the amplitudes are a_ij0 = A_i B_j, a_ij1 = A'_i B'_j.
// When all eight constants are nonzero, the remaining four sub-determinants
// vanish exactly when A' = pA and B' = qB, and then z = (1, pq).
TEST(ProportionalSlices, RatioConditionsDecideSeparability) {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> mode(0, 3);
    auto r = [&]() { return detail::random_gaussian_rational(rng, false); };
    int planted = 0;
    for (int n = 0; n < 4000; n++) {
        std::array<GaussianRational, 2> A = {r(), r()}, B = {r(), r()}, Ap, Bp;
        GaussianRational p = r(), q = r();
        int m = mode(rng);
        Ap = (m & 1) ? std::array{p * A[0], p * A[1]} : std::array{r(), r()};
        Bp = (m & 2) ? std::array{q * B[0], q * B[1]} : std::array{r(), r()};
        TripartiteState<Exact>::amplitudes amps;
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                amps[4 * i + 2 * j] = A[i] * B[j];
                amps[4 * i + 2 * j + 1] = Ap[i] * Bp[j];
            }
        }
        TripartiteState<Exact> s(amps);
        auto sub = sub_concurrences(s);
        ASSERT_EQ(sub[4], 0);
        ASSERT_EQ(sub[5], 0);
        bool four_zero = sub[0] == 0 && sub[1] == 0 && sub[2] == 0 && sub[3] == 0;
        bool ratios = Ap[0] / A[0] == Ap[1] / A[1] && Bp[0] / B[0] == Bp[1] / B[1];
        ASSERT_EQ(four_zero, ratios);
        ASSERT_EQ(is_separable(s), ratios);
        if (m == 3) {
            planted++;
            ASSERT_TRUE(ratios);
            auto f = extract_factors(s);
            ASSERT_TRUE(parallel(f.fz, {gq(1), p * q}));
        }
    }
    EXPECT_GT(planted, 500);
}

}  // namespace
}  // namespace triqubit
