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

// JSON forms:
//
//   state:          {"amps": [[re, im], ...], "scale2": "p/q", "backend": "exact"|"approx"}
//                   exact parts are "p/q" strings, floating parts are numbers
//   classification: {"det_abs2": r, "sub2": [r x6], "display": [d x7], "separable": bool}
//   unitary input:  [["re,im", "re,im"], ["re,im", "re,im"]] or
//                   {"matrix": [[...], [...]], "sqrt_scale2": "p/q"}
//                   where the matrix is multiplied by sqrt(sqrt_scale2)

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

#include "triqubit/cayley.hpp"
#include "triqubit/local_unitary.hpp"
#include "triqubit/measurement.hpp"
#include "triqubit/separability.hpp"

namespace triqubit {

using json = nlohmann::json;

inline json real_to_json(const Rational &r) {
    return r.get_str();
}
inline json real_to_json(double r) {
    return r;
}

inline json scalar_to_json(const GaussianRational &z) {
    return json::array({z.re.get_str(), z.im.get_str()});
}
inline json scalar_to_json(const std::complex<double> &z) {
    return json::array({z.real(), z.imag()});
}

template <Backend B, size_t N>
json state_to_json(const PureState<B, N> &s) {
    json amps = json::array();
    for (const auto &a : s.amps()) {
        amps.push_back(scalar_to_json(a));
    }
    return {{"amps", amps}, {"scale2", real_to_json(s.scale2())}, {"backend", std::string(B::name)}};
}

using AnyState = std::variant<TripartiteState<Exact>, TripartiteState<Approx>, BipartiteState<Exact>,
                              BipartiteState<Approx>>;

namespace detail {

inline Rational json_rational(const json &j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(mpz_class(std::to_string(j.get<long long>()), 10));
    }
    throw Error(ErrorCode::InvalidInput, "exact values must be \"p/q\" strings or integers, got " + j.dump());
}

inline double json_double(const json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        try {
            return parse_rational(text).get_d();
        } catch (const Error &) {
        }
        try {
            size_t used = 0;
            double v = std::stod(text, &used);
            if (used == text.size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    throw Error(ErrorCode::InvalidInput, "not a number: " + j.dump());
}

template <Backend B, size_t N>
PureState<B, N> state_from_json(const json &amps, const json &scale2) {
    typename PureState<B, N>::amplitudes out;
    for (size_t b = 0; b < out.size(); b++) {
        const json &pair = amps[b];
        if (!pair.is_array() || pair.size() != 2) {
            throw Error(ErrorCode::InvalidInput, "amplitude must be a [re, im] pair");
        }
        if constexpr (std::is_same_v<B, Exact>) {
            out[b] = GaussianRational(json_rational(pair[0]), json_rational(pair[1]));
        } else {
            out[b] = {json_double(pair[0]), json_double(pair[1])};
        }
    }
    if constexpr (std::is_same_v<B, Exact>) {
        return PureState<B, N>(out, scale2.is_null() ? Rational(1) : json_rational(scale2));
    } else {
        return PureState<B, N>(out, scale2.is_null() ? 1.0 : json_double(scale2));
    }
}

}  // namespace detail

/// Reads the state form. Backend defaults to "exact".
inline AnyState state_from_json(const json &j) {
    if (!j.is_object() || !j.contains("amps") || !j["amps"].is_array()) {
        throw Error(ErrorCode::InvalidInput, "state JSON needs an \"amps\" array");
    }
    std::string backend = j.value("backend", std::string(Exact::name));
    const json &amps = j["amps"];
    json scale2 = j.contains("scale2") ? j["scale2"] : json();
    bool exact = backend == Exact::name;
    if (!exact && backend != Approx::name) {
        throw Error(ErrorCode::InvalidInput, "unknown backend '" + backend + "'");
    }
    if (amps.size() == 8) {
        if (exact) {
            return detail::state_from_json<Exact, 3>(amps, scale2);
        }
        return detail::state_from_json<Approx, 3>(amps, scale2);
    }
    if (amps.size() == 4) {
        if (exact) {
            return detail::state_from_json<Exact, 2>(amps, scale2);
        }
        return detail::state_from_json<Approx, 2>(amps, scale2);
    }
    throw Error(ErrorCode::InvalidInput, "\"amps\" must hold 8 or 4 entries");
}

template <Backend B>
json classification_to_json(const ClassificationVector<B> &v, const Tolerance &tol = {}) {
    json sub = json::array();
    for (const auto &c : v.sub2) {
        sub.push_back(real_to_json(c));
    }
    json display = json::array();
    for (double d : display_normalize(v, tol).values) {
        display.push_back(d);
    }
    return {{"det_abs2", real_to_json(v.det_abs2)},
            {"sub2", sub},
            {"display", display},
            {"separable", v.all_zero(tol)}};
}

template <Backend B>
json factorization_to_json(const Factorization<B> &f) {
    auto pair = [](const auto &v) { return json::array({scalar_to_json(v[0]), scalar_to_json(v[1])}); };
    return {{"x", pair(f.fx)}, {"y", pair(f.fy)}, {"z", pair(f.fz)}, {"scale2", real_to_json(f.scale2)}};
}

template <Backend B>
json collapse_to_json(const CollapseResult<B> &r) {
    return {{"prob", real_to_json(r.probability)},
            {"post_state", state_to_json(r.post_state)},
            {"concurrence", r.post_concurrence()},
            {"concurrence2", real_to_json(r.post_concurrence2)}};
}

using AnyUnitary = std::variant<Unitary2<Exact>, Unitary2<Approx>>;

namespace detail {

struct EntryText {
    std::string re;
    std::string im;
};

inline bool looks_rational(const std::string &s) {
    try {
        parse_rational(s);
        return true;
    } catch (const Error &) {
        return false;
    }
}

inline std::string trim(std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace detail

/// Reads a 2x2 unitary. Entries are "re,im" or "re" strings, or plain numbers.
/// The result is exact when every entry and sqrt_scale2 is rational text.
inline AnyUnitary unitary_from_json(const json &j) {
    const json *matrix = &j;
    json sqrt_scale2 = "1";
    if (j.is_object()) {
        if (!j.contains("matrix")) {
            throw Error(ErrorCode::InvalidInput, "unitary object needs a \"matrix\" field");
        }
        matrix = &j["matrix"];
        if (j.contains("sqrt_scale2")) {
            sqrt_scale2 = j["sqrt_scale2"];
        }
    }
    if (!matrix->is_array() || matrix->size() != 2 || !(*matrix)[0].is_array() || !(*matrix)[1].is_array() ||
        (*matrix)[0].size() != 2 || (*matrix)[1].size() != 2) {
        throw Error(ErrorCode::InvalidInput, "unitary must be a 2x2 array");
    }

    std::array<json, 4> raw = {(*matrix)[0][0], (*matrix)[0][1], (*matrix)[1][0], (*matrix)[1][1]};
    std::array<detail::EntryText, 4> parts;
    bool exact = sqrt_scale2.is_string() && detail::looks_rational(sqrt_scale2.get<std::string>());
    for (size_t n = 0; n < 4; n++) {
        if (raw[n].is_number()) {
            parts[n] = {raw[n].dump(), "0"};
            exact = exact && raw[n].is_number_integer();
            continue;
        }
        if (!raw[n].is_string()) {
            throw Error(ErrorCode::InvalidInput, "unitary entry must be a string or number");
        }
        std::string text = raw[n].get<std::string>();
        size_t comma = text.find(',');
        parts[n].re = detail::trim(text.substr(0, comma));
        parts[n].im = comma == std::string::npos ? "0" : detail::trim(text.substr(comma + 1));
        exact = exact && detail::looks_rational(parts[n].re) && detail::looks_rational(parts[n].im);
    }

    if (exact) {
        Unitary2<Exact>::entries m;
        for (size_t n = 0; n < 4; n++) {
            m[n] = GaussianRational(parse_rational(parts[n].re), parse_rational(parts[n].im));
        }
        return Unitary2<Exact>(m, parse_rational(sqrt_scale2.get<std::string>()));
    }
    double f = std::sqrt(detail::json_double(sqrt_scale2));
    Unitary2<Approx>::entries m;
    for (size_t n = 0; n < 4; n++) {
        m[n] = std::complex<double>(detail::json_double(parts[n].re), detail::json_double(parts[n].im)) * f;
    }
    return Unitary2<Approx>(m);
}

}  // namespace triqubit
