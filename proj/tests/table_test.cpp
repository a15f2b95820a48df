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

#include <chrono>

#include "support.hpp"

namespace triqubit {
namespace {

const TableRow &row(const std::vector<TableRow> &rows, const std::string &name) {
    for (const auto &r : rows) {
        if (r.reference.name == name) {
            return r;
        }
    }
    throw std::runtime_error("missing row " + name);
}

using Row7 = std::array<double, 7>;

TEST(ReferenceTable, ComputedRows) {
    auto start = std::chrono::steady_clock::now();
    auto rows = reproduce_table();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(seconds, 1.0);
    ASSERT_EQ(rows.size(), 6u);

    EXPECT_EQ(row(rows, "separable").display.values, (Row7{0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(row(rows, "W").display.values, (Row7{0, 1, 0, 1, 0, 1, 0}));
    EXPECT_EQ(row(rows, "GHZ").display.values, (Row7{1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(row(rows, "psi").display.values, (Row7{1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(row(rows, "phi").display.values, (Row7{1, 1, 1, 1, 1, 1, 1}));
    // Recomputed from the amplitudes; the published row differs.
    EXPECT_EQ(row(rows, "cluster").display.values, (Row7{1, 1, 1, 0, 0, 1, 1}));
}

TEST(ReferenceTable, StatusAgainstPublishedRows) {
    auto rows = reproduce_table();
    EXPECT_EQ(row(rows, "separable").status, RowStatus::Agrees);
    EXPECT_EQ(row(rows, "W").status, RowStatus::AgreesNonzeroFirst);
    EXPECT_EQ(row(rows, "GHZ").status, RowStatus::Agrees);
    EXPECT_EQ(row(rows, "psi").status, RowStatus::Agrees);
    EXPECT_EQ(row(rows, "phi").status, RowStatus::Agrees);
    EXPECT_EQ(row(rows, "cluster").status, RowStatus::Disagrees);
    EXPECT_EQ(row(rows, "cluster").reference.published, (Row7{1, 1, 0, 1, 1, 0, 1}));
}

TEST(ReferenceTable, IndependentEvaluationPathsAgree) {
    for (const auto &r : reproduce_table()) {
        EXPECT_TRUE(r.paths_agree) << r.reference.name;
        EXPECT_EQ(cayley_det(r.state), cayley_det_schlafli(r.state));
        EXPECT_EQ(sub_determinants_by_formula(r.state), sub_concurrences(r.state));
    }
}

TEST(ReferenceTable, ClusterPatternIsNotARelabeling) {
    // No qubit permutation of the cluster amplitudes reproduces the published
    // zero pattern either.
    auto rows = reproduce_table();
    const auto &cluster = row(rows, "cluster");
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto &p : perms) {
        auto d = display_normalize(classify(permute_qubits(cluster.state, p)));
        EXPECT_NE(d.values, cluster.reference.published);
    }
}

TEST(ReferenceTable, DeterminantValues) {
    auto rows = reproduce_table();
    EXPECT_EQ(row(rows, "GHZ").classification.det_abs2, Rational(1, 16));
    EXPECT_EQ(row(rows, "psi").classification.det_abs2, Rational(1, 16));
    EXPECT_EQ(row(rows, "W").classification.det_abs2, 0);
}

TEST(CompareRows, NonzeroFirstOrdering) {
    EXPECT_EQ(compare_rows({0, 1, 0, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 0, 0}), RowStatus::AgreesNonzeroFirst);
    EXPECT_EQ(compare_rows({1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}), RowStatus::Agrees);
    EXPECT_EQ(compare_rows({1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}), RowStatus::Disagrees);
}

TEST(FormatRow, Compact) {
    EXPECT_EQ(format_row({1, 0, 0, 0, 0, 0, 0}), "[1;0,0,0,0,0,0]");
    EXPECT_EQ(format_row({0, 0.5, 1, 0, 0, 0, 0}), "[0;0.5,1,0,0,0,0]");
}

}  // namespace
}  // namespace triqubit
