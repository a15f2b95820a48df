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

// Reference states with their published classification rows. The states are
// stored as ket expressions and always recomputed; the published rows are
// only compared against.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "triqubit/cayley.hpp"
#include "triqubit/ket_parser.hpp"

namespace triqubit {

struct ReferenceState {
    std::string name;
    std::string expression;
    std::array<double, 7> published;
};

inline const std::vector<ReferenceState> &reference_states() {
    static const std::vector<ReferenceState> rows = {
        // (|0> + 2|1>) (x) (|0> - |1>) (x) (|0> + i|1>), expanded.
        {"separable", "|000> + i|001> - |010> - i|011> + 2|100> + 2i|101> - 2|110> - 2i|111>", {0, 0, 0, 0, 0, 0, 0}},
        {"W", "1/sqrt(3)(|001>+|100>+|010>)", {0, 1, 1, 1, 0, 0, 0}},
        {"GHZ", "1/sqrt(2)(|000>+|111>)", {1, 0, 0, 0, 0, 0, 0}},
        {"cluster", "(|000>+|001>+|100>+|101>+|010>-|011>-|110>+|111>)/sqrt(8)", {1, 1, 0, 1, 1, 0, 1}},
        {"psi", "1/2(|100>+|001>+|010>+|111>)", {1, 1, 1, 1, 1, 1, 1}},
        {"phi", "1/2(|000>+|011>+|101>+|110>)", {1, 1, 1, 1, 1, 1, 1}},
    };
    return rows;
}

/// Agrees: identical in list order. AgreesNonzeroFirst: identical once the six
/// C entries are listed largest first (how the published W row is laid out).
enum class RowStatus { Agrees, AgreesNonzeroFirst, Disagrees };

constexpr std::string_view to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Agrees:
            return "AGREES";
        case RowStatus::AgreesNonzeroFirst:
            return "AGREES (nonzero-first order)";
        case RowStatus::Disagrees:
            return "DISAGREES";
    }
    return "?";
}

inline RowStatus compare_rows(const std::array<double, 7> &computed, const std::array<double, 7> &published) {
    if (computed == published) {
        return RowStatus::Agrees;
    }
    auto sorted = computed;
    std::stable_sort(sorted.begin() + 1, sorted.end(), std::greater<>());
    if (sorted == published) {
        return RowStatus::AgreesNonzeroFirst;
    }
    return RowStatus::Disagrees;
}

/// Squared sub-determinants [x0, x1, y0, y1, z0, z1] written out term by term
/// from a_ijk, without the slice/det2 machinery. Scaled by scale2^2.
inline std::array<Rational, 6> sub_determinants_by_formula(const TripartiteState<Exact> &s) {
    auto a = [&](int i, int j, int k) { return s(i, j, k); };
    std::array<GaussianRational, 6> d = {
        a(0, 0, 0) * a(0, 1, 1) - a(0, 0, 1) * a(0, 1, 0),  // x0
        a(1, 0, 0) * a(1, 1, 1) - a(1, 0, 1) * a(1, 1, 0),  // x1
        a(0, 0, 0) * a(1, 0, 1) - a(0, 0, 1) * a(1, 0, 0),  // y0
        a(0, 1, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 1, 0),  // y1
        a(0, 0, 0) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 0),  // z0
        a(0, 0, 1) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 1),  // z1
    };
    std::array<Rational, 6> out;
    Rational s2 = s.scale2() * s.scale2();
    for (size_t n = 0; n < 6; n++) {
        out[n] = s2 * d[n].abs2();
    }
    return out;
}

struct TableRow {
    ReferenceState reference;
    TripartiteState<Exact> state;
    ClassificationVector<Exact> classification;
    DisplayVector display;
    RowStatus status;
    /// Hyperdeterminant and sub-determinants agree between the two
    /// independent evaluation routes.
    bool paths_agree;
};

inline TableRow evaluate_reference(const ReferenceState &ref) {
    auto parsed = parse_state(ref.expression);
    TripartiteState<Exact> s = std::get<TripartiteState<Exact>>(parsed);
    auto v = classify(s);
    auto d = display_normalize(v);

    bool agree = cayley_det(s) == cayley_det_schlafli(s);
    auto by_formula = sub_determinants_by_formula(s);
    auto by_slice = sub_concurrences(s);
    agree = agree && by_formula == by_slice;

    return TableRow{ref, s, v, d, compare_rows(d.values, ref.published), agree};
}

inline std::vector<TableRow> reproduce_table() {
    std::vector<TableRow> out;
    for (const auto &ref : reference_states()) {
        out.push_back(evaluate_reference(ref));
    }
    return out;
}

inline std::string format_row(const std::array<double, 7> &v) {
    auto num = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", x);
        return std::string(buf);
    };
    std::string out = "[" + num(v[0]) + ";";
    for (size_t n = 1; n < 7; n++) {
        out += (n > 1 ? "," : "") + num(v[n]);
    }
    return out + "]";
}

}  // namespace triqubit
