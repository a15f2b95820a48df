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

#include <map>
#include <random>

#include "support.hpp"

namespace triqubit {
namespace {

TEST(StateKind, NamesRoundTrip) {
    for (auto [name, kind] : kStateKindNames) {
        EXPECT_EQ(parse_state_kind(name), kind);
        EXPECT_EQ(state_kind_name(kind), name);
    }
    EXPECT_FALSE(parse_state_kind("bogus").has_value());
}

TEST(RandomState, DeterministicForSeed) {
    for (auto [name, kind] : kStateKindNames) {
        std::mt19937_64 a(42), b(42);
        for (int n = 0; n < 20; n++) {
            ASSERT_EQ(random_state<Exact>(kind, a), random_state<Exact>(kind, b)) << name;
        }
    }
}

TEST(RandomState, FamiliesHaveTheirStructure) {
    std::mt19937_64 rng(131);
    for (int n = 0; n < 500; n++) {
        ASSERT_TRUE(is_separable(random_state<Exact>(StateKind::Product, rng)));
        auto c3 = random_state<Exact>(StateKind::Case3, rng);
        ASSERT_FALSE(is_separable(c3));
        for (const auto &c : classify(c3).sub2) {
            ASSERT_EQ(c, 0);
        }
        auto w = random_state<Exact>(StateKind::WLike, rng);
        ASSERT_EQ(classify(w).det_abs2, 0);
        auto sparse = random_state<Exact>(StateKind::Sparse, rng);
        int zeros = 0;
        for (const auto &a : sparse.amps()) {
            zeros += a.is_zero();
        }
        ASSERT_GE(zeros, 1);
        ASSERT_LE(zeros, 6);
    }
}

TEST(RandomState, ExactEntriesStayInRange) {
    std::mt19937_64 rng(137);
    for (int n = 0; n < 2000; n++) {
        auto z = detail::random_gaussian_rational(rng, true);
        for (const Rational *part : {&z.re, &z.im}) {
            ASSERT_LE(abs(*part), 9);
            ASSERT_LE(part->get_den(), 5);
        }
    }
}

TEST(RandomState, MixedPoolCoversSeparableAndEntangled) {
    std::mt19937_64 rng(139);
    int separable = 0;
    const int n = 5000;
    for (int k = 0; k < n; k++) {
        separable += is_separable(random_state<Exact>(StateKind::Mixed, rng));
    }
    // 30% products plus occasional sparse/W-like hits.
    EXPECT_GT(separable, n * 25 / 100);
    EXPECT_LT(separable, n * 60 / 100);
}

TEST(RandomState, LuProductIsFloatingSeparable) {
    std::mt19937_64 rng(149);
    for (int n = 0; n < 500; n++) {
        auto s = normalized(random_state<Approx>(StateKind::LuProduct, rng));
        ASSERT_TRUE(is_separable(s));
        ASSERT_TRUE(rank1_oracle(s));
    }
}

}  // namespace
}  // namespace triqubit
