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
const auto kPsi = "1/2(|100>+|010>+|001>+|111>)";

Rational normalized_abs2(const BipartiteState<Exact> &c, size_t b) {
    return c.scale2() * c.amp(b).abs2() / c.norm2();
}

TEST(Collapse, GhzFirstQubitZero) {
    auto r = collapse(tri(kGhz), Axis::X, Outcome::Zero);
    EXPECT_EQ(r.probability, Rational(1, 2));
    EXPECT_EQ(normalized_abs2(r.post_state, 0b00), 1);
    EXPECT_EQ(r.post_concurrence2, 0);
}

TEST(Collapse, WFirstQubitZeroStaysEntangled) {
    auto r = collapse(tri(kW), Axis::X, Outcome::Zero);
    EXPECT_EQ(r.probability, Rational(2, 3));
    EXPECT_EQ(normalized_abs2(r.post_state, 0b01), Rational(1, 2));
    EXPECT_EQ(normalized_abs2(r.post_state, 0b10), Rational(1, 2));
    EXPECT_EQ(r.post_concurrence2, 1);
    EXPECT_DOUBLE_EQ(r.post_concurrence(), 1.0);
}

TEST(Collapse, WFirstQubitOneIsSeparable) {
    auto r = collapse(tri(kW), Axis::X, Outcome::One);
    EXPECT_EQ(r.probability, Rational(1, 3));
    EXPECT_EQ(normalized_abs2(r.post_state, 0b00), 1);
    EXPECT_EQ(r.post_concurrence2, 0);
}

TEST(Collapse, PsiFirstQubitOneIsBell) {
    auto r = collapse(tri(kPsi), Axis::X, Outcome::One);
    EXPECT_EQ(r.probability, Rational(1, 2));
    EXPECT_EQ(normalized_abs2(r.post_state, 0b00), Rational(1, 2));
    EXPECT_EQ(normalized_abs2(r.post_state, 0b11), Rational(1, 2));
    EXPECT_EQ(r.post_concurrence2, 1);
}

TEST(Collapse, ImpossibleOutcomeIsAnError) {
    for (auto [expr, axis, outcome] : {std::tuple{"|000>", Axis::X, Outcome::One},
                                       std::tuple{"|010> + |011>", Axis::Y, Outcome::Zero},
                                       std::tuple{"|110>", Axis::Z, Outcome::One}}) {
        try {
            collapse(tri(expr), axis, outcome);
            FAIL() << expr;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::ImpossibleOutcome);
        }
    }
    Tolerance tol{1e-10};
    TripartiteState<Approx>::amplitudes amps{};
    amps[0] = 1.0;
    amps[4] = 1e-6;  // probability 1e-12, below eps
    EXPECT_THROW(collapse(TripartiteState<Approx>(amps), Axis::X, Outcome::One, tol), Error);
}

TEST(Collapse, ContrastBetweenGhzAndPsi) {
    for (Axis axis : kAxes) {
        for (Outcome outcome : kOutcomes) {
            EXPECT_EQ(collapse(tri(kGhz), axis, outcome).post_concurrence2, 0);
            EXPECT_EQ(collapse(tri(kPsi), axis, outcome).post_concurrence2, 1);
            auto w = collapse(tri(kW), axis, outcome);
            EXPECT_EQ(w.probability, outcome == Outcome::Zero ? Rational(2, 3) : Rational(1, 3));
            EXPECT_EQ(w.post_concurrence2, outcome == Outcome::Zero ? 1 : 0);
        }
    }
}

TEST(Collapse, ProbabilitiesSumToOneExactly) {
    std::mt19937_64 rng(53);
    for (int n = 0; n < 2000; n++) {
        auto s = random_state<Exact>(StateKind::Mixed, rng);
        for (Axis axis : kAxes) {
            Rational total = 0;
            for (Outcome outcome : kOutcomes) {
                try {
                    auto r = collapse(s, axis, outcome);
                    ASSERT_GT(r.probability, 0);
                    ASSERT_LE(r.probability, 1);
                    ASSERT_EQ(r.probability, norm2(r.post_state) / norm2(s));
                    total += r.probability;
                } catch (const Error &e) {
                    ASSERT_EQ(e.code(), ErrorCode::ImpossibleOutcome);
                }
            }
            ASSERT_EQ(total, 1);
        }
    }
}

TEST(Collapse, ZeroPatternMatchesClassification) {
    std::mt19937_64 rng(59);
    for (int n = 0; n < 2000; n++) {
        auto s = random_state<Exact>(StateKind::Mixed, rng);
        auto v = classify(s);
        for (size_t m = 0; m < 6; m++) {
            auto [axis, outcome] = kSubOrder[m];
            bool post_separable = true;
            try {
                post_separable = collapse(s, axis, outcome).post_concurrence2 == 0;
            } catch (const Error &) {
            }
            ASSERT_EQ(post_separable, v.sub2[m] == 0);
        }
    }
}

}  // namespace
}  // namespace triqubit
