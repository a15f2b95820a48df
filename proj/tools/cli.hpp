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

// Command-line front end. Exit codes:
//   0 success
//   1 usage error, or a failed bulk verification in `random`
//   2 expression / JSON parse error
//   3 precondition violated (wrong arity, impossible outcome, not separable, ...)
//   4 backend mismatch (exact state with floating unitary, ...)

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "triqubit/triqubit.hpp"

namespace triqubit::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kPrecondition = 3,
    kBackendMismatch = 4,
};

struct Options {
    bool json = false;
    bool exact = false;
    bool floating = false;
    double eps = Tolerance{}.eps;
    uint64_t seed = 42;
    size_t count = 10;
    int qubit = 1;
    int outcome = 0;
    std::string u1, u2, u3;
    std::string json_state;
    std::string kind = "mixed";
    std::string expr;

    Tolerance tolerance() const {
        return Tolerance{eps};
    }
};

namespace detail {

/// Raised for conditions that map directly onto an exit code.
struct Exit {
    int code;
    std::string message;
};

inline std::string fmt_double(double x) {
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

inline std::string fmt_real(const Rational &r) {
    return r.get_str();
}
inline std::string fmt_real(double r) {
    return fmt_double(r);
}

inline std::string fmt_scalar(const GaussianRational &z) {
    if (sgn(z.im) == 0) {
        return z.re.get_str();
    }
    return "(" + z.re.get_str() + (sgn(z.im) < 0 ? " - " : " + ") + Rational(abs(z.im)).get_str() + "i)";
}
inline std::string fmt_scalar(const std::complex<double> &z) {
    if (z.imag() == 0) {
        return fmt_double(z.real());
    }
    return "(" + fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt_double(std::abs(z.imag())) + "i)";
}

template <Backend B, size_t N>
std::string describe_state(const PureState<B, N> &s) {
    if constexpr (std::is_same_v<B, Exact>) {
        try {
            return render(s);
        } catch (const Error &) {
        }
    }
    std::string out = "sqrt(" + fmt_real(s.scale2()) + ") * (";
    bool first = true;
    for (size_t b = 0; b < s.dimension; b++) {
        if (B::is_zero(s.amp(b))) {
            continue;
        }
        out += (first ? "" : " + ") + fmt_scalar(s.amp(b)) + "|" + basis_label(b, N) + ">";
        first = false;
    }
    return out + ")";
}

inline AnyState read_state(const Options &opt) {
    if (!opt.json_state.empty()) {
        std::ifstream in(opt.json_state);
        if (!in) {
            throw Exit{kUsage, "cannot open " + opt.json_state};
        }
        json j;
        try {
            in >> j;
        } catch (const json::exception &e) {
            throw Exit{kParse, std::string("invalid JSON state: ") + e.what()};
        }
        try {
            return state_from_json(j);
        } catch (const Error &e) {
            throw Exit{kParse, e.what()};
        }
    }
    if (opt.expr.empty()) {
        throw Exit{kUsage, "no state given (pass an expression or --json-state)"};
    }
    try {
        ExactState parsed = parse_state(opt.expr);
        if (auto *t = std::get_if<TripartiteState<Exact>>(&parsed)) {
            return *t;
        }
        return std::get<BipartiteState<Exact>>(parsed);
    } catch (const ParseError &e) {
        throw Exit{kParse, e.what()};
    }
}

/// Resolves --exact/--float against the state's own backend.
template <size_t N>
std::variant<PureState<Exact, N>, PureState<Approx, N>> choose_backend(const AnyState &any, const Options &opt,
                                                                     bool prefer_float = false) {
    if (auto *e = std::get_if<PureState<Exact, N>>(&any)) {
        if (opt.floating || (prefer_float && !opt.exact)) {
            return to_approx(*e);
        }
        return *e;
    }
    if (auto *a = std::get_if<PureState<Approx, N>>(&any)) {
        if (opt.exact) {
            throw Exit{kBackendMismatch, "BackendMismatch: floating state cannot be analysed with --exact"};
        }
        return *a;
    }
    throw Exit{kPrecondition, "expected a " + std::to_string(N) + "-qubit state"};
}

inline std::variant<TripartiteState<Exact>, TripartiteState<Approx>> tripartite(const AnyState &any,
                                                                                const Options &opt,
                                                                                bool prefer_float = false) {
    return choose_backend<3>(any, opt, prefer_float);
}

template <Backend B>
std::string list_text(const ClassificationVector<B> &v) {
    std::array<double, 7> moduli;
    moduli[0] = std::sqrt(B::to_double(v.det_abs2));
    for (size_t n = 0; n < 6; n++) {
        moduli[n + 1] = std::sqrt(B::to_double(v.sub2[n]));
    }
    return format_row(moduli);
}

template <Backend B>
void print_classification(std::ostream &out, const TripartiteState<B> &s, const Options &opt) {
    auto v = classify(s);
    auto tol = opt.tolerance();
    if (opt.json) {
        json j = classification_to_json(v, tol);
        j["state"] = state_to_json(s);
        j["backend"] = std::string(B::name);
        out << j.dump(2) << "\n";
        return;
    }
    out << "state:      " << describe_state(s) << "\n";
    out << "backend:    " << B::name << "\n";
    out << "|Det|^2:    " << fmt_real(v.det_abs2) << "\n";
    out << "C^2:        [";
    for (size_t n = 0; n < 6; n++) {
        out << (n ? ", " : "") << fmt_real(v.sub2[n]);
    }
    out << "]\n";
    out << "list:       " << list_text(v) << "\n";
    out << "display:    " << format_row(display_normalize(v, tol).values) << "\n";
    out << "separable:  " << (v.all_zero(tol) ? "true" : "false") << "\n";
}

inline int cmd_classify(const Options &opt, std::ostream &out) {
    auto s = tripartite(read_state(opt), opt);
    std::visit([&](const auto &state) { print_classification(out, state, opt); }, s);
    return kOk;
}

inline int cmd_table(const Options &opt, std::ostream &out) {
    auto rows = reproduce_table();
    if (opt.json) {
        json arr = json::array();
        for (const auto &r : rows) {
            json j = classification_to_json(r.classification);
            j["name"] = r.reference.name;
            j["expression"] = r.reference.expression;
            j["published"] = r.reference.published;
            j["status"] = std::string(to_string(r.status));
            j["agrees"] = r.status != RowStatus::Disagrees;
            j["paths_agree"] = r.paths_agree;
            arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
        return kOk;
    }
    out << std::left << std::setw(11) << "state" << std::setw(19) << "computed" << std::setw(19) << "published"
        << "status\n";
    for (const auto &r : rows) {
        out << std::setw(11) << r.reference.name << std::setw(19) << format_row(r.display.values) << std::setw(19)
            << format_row(r.reference.published) << to_string(r.status)
            << (r.paths_agree ? "" : "  [internal evaluation paths differ]") << "\n";
    }
    out << "\nList order is [|Det|; C_x0, C_x1, C_y0, C_y1, C_z0, C_z1]. Entries are rescaled by 1/|Det|,\n"
           "or by 1/max C when Det = 0.\n";
    return kOk;
}

inline Axis axis_from_qubit(int qubit) {
    if (qubit < 1 || qubit > 3) {
        throw Exit{kUsage, "--qubit must be 1, 2 or 3"};
    }
    return kAxes[qubit - 1];
}

inline int cmd_measure(const Options &opt, std::ostream &out) {
    Axis axis = axis_from_qubit(opt.qubit);
    if (opt.outcome != 0 && opt.outcome != 1) {
        throw Exit{kUsage, "--outcome must be 0 or 1"};
    }
    Outcome outcome = kOutcomes[opt.outcome];
    auto s = tripartite(read_state(opt), opt);
    std::visit(
        [&](const auto &state) {
            using B = typename std::decay_t<decltype(state)>::backend;
            auto r = collapse(state, axis, outcome, opt.tolerance());
            if (opt.json) {
                out << collapse_to_json(r).dump(2) << "\n";
                return;
            }
            out << "prob:        " << fmt_real(r.probability);
            if constexpr (std::is_same_v<B, Exact>) {
                out << " (" << fmt_double(r.probability.get_d()) << ")";
            }
            out << "\n";
            out << "post_state:  " << describe_state(r.post_state) << "\n";
            out << "concurrence: " << fmt_double(r.post_concurrence()) << "\n";
        },
        s);
    return kOk;
}

struct UnitarySpec {
    std::optional<AnyUnitary> value;
    bool random = false;
};

inline UnitarySpec read_unitary(const std::string &text) {
    if (text.empty() || text == "I" || text == "identity") {
        return {};
    }
    if (text == "random") {
        return {std::nullopt, true};
    }
    try {
        return {unitary_from_json(json::parse(text)), false};
    } catch (const json::exception &e) {
        throw Exit{kParse, std::string("invalid unitary JSON: ") + e.what()};
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NotUnitary) {
            throw Exit{kPrecondition, e.what()};
        }
        throw Exit{kParse, e.what()};
    }
}

template <Backend B, typename Rng>
Unitary2<B> resolve_unitary(const UnitarySpec &spec, Rng &rng) {
    if (spec.random) {
        if constexpr (std::is_same_v<B, Approx>) {
            return random_unitary2(rng);
        } else {
            throw Exit{kBackendMismatch, "BackendMismatch: random unitaries are floating; drop --exact"};
        }
    }
    if (!spec.value) {
        return Unitary2<B>::identity();
    }
    if (auto *u = std::get_if<Unitary2<B>>(&*spec.value)) {
        return *u;
    }
    if constexpr (std::is_same_v<B, Approx>) {
        return to_approx(std::get<Unitary2<Exact>>(*spec.value));
    } else {
        throw Exit{kBackendMismatch, "BackendMismatch: floating unitary applied to an exact state (use --float)"};
    }
}

inline int cmd_transform(const Options &opt, std::ostream &out) {
    std::array<UnitarySpec, 3> specs = {read_unitary(opt.u1), read_unitary(opt.u2), read_unitary(opt.u3)};
    bool wants_float = false;
    for (const auto &sp : specs) {
        wants_float |= sp.random || (sp.value && std::holds_alternative<Unitary2<Approx>>(*sp.value));
    }
    bool any_random = specs[0].random || specs[1].random || specs[2].random;
    std::mt19937_64 rng(opt.seed);
    AnyState any = read_state(opt);

    auto emit = [&](const auto &before, const auto &after) {
        if (opt.json) {
            out << json{{"input", state_to_json(before)}, {"output", state_to_json(after)}}.dump(2) << "\n";
            return;
        }
        out << "input:  " << describe_state(before) << "\n";
        out << "output: " << describe_state(after) << "\n";
    };

    bool bipartite = std::holds_alternative<BipartiteState<Exact>>(any) ||
                     std::holds_alternative<BipartiteState<Approx>>(any);
    if (bipartite) {
        if (!opt.u3.empty()) {
            throw Exit{kPrecondition, "two-qubit state takes only --u1 and --u2"};
        }
        auto s = choose_backend<2>(any, opt, any_random);
        if (std::holds_alternative<BipartiteState<Exact>>(s) && wants_float) {
            throw Exit{kBackendMismatch, "BackendMismatch: floating unitary applied to an exact state (use --float)"};
        }
        std::visit(
            [&](const auto &state) {
                using B = typename std::decay_t<decltype(state)>::backend;
                emit(state, apply_local_2(state, resolve_unitary<B>(specs[0], rng), resolve_unitary<B>(specs[1], rng)));
            },
            s);
        return kOk;
    }

    auto s = tripartite(any, opt, any_random);
    if (std::holds_alternative<TripartiteState<Exact>>(s) && wants_float) {
        throw Exit{kBackendMismatch, "BackendMismatch: floating unitary applied to an exact state (use --float)"};
    }
    std::visit(
        [&](const auto &state) {
            using B = typename std::decay_t<decltype(state)>::backend;
            auto v1 = resolve_unitary<B>(specs[0], rng);
            auto v2 = resolve_unitary<B>(specs[1], rng);
            auto v3 = resolve_unitary<B>(specs[2], rng);
            emit(state, apply_local_3(state, v1, v2, v3));
        },
        s);
    return kOk;
}

template <Backend B>
json factor_json_or_null(const TripartiteState<B> &s, const Tolerance &tol) {
    if (!is_separable(s, tol)) {
        return nullptr;
    }
    return factorization_to_json(extract_factors(s, tol));
}

template <Backend B>
void print_factors(std::ostream &out, const Factorization<B> &f) {
    auto pair = [](const auto &v) { return "(" + fmt_scalar(v[0]) + ", " + fmt_scalar(v[1]) + ")"; };
    out << "factors:    ";
    if (f.scale2 != typename B::real_type(1)) {
        out << "sqrt(" << fmt_real(f.scale2) << ") * ";
    }
    out << pair(f.fx) << " (x) " << pair(f.fy) << " (x) " << pair(f.fz) << "\n";
}

inline int cmd_check_sep(const Options &opt, std::ostream &out) {
    auto s = tripartite(read_state(opt), opt);
    std::visit(
        [&](const auto &state) {
            auto tol = opt.tolerance();
            bool sep = is_separable(state, tol);
            bool oracle = rank1_oracle(state, tol);
            if (opt.json) {
                out << json{{"separable", sep},
                            {"factors", factor_json_or_null(state, tol)},
                            {"oracle_agrees", sep == oracle}}
                           .dump(2)
                    << "\n";
                return;
            }
            out << "separable:  " << (sep ? "true" : "false") << "\n";
            if (sep) {
                print_factors(out, extract_factors(state, tol));
            }
            out << "rank-1:     " << (oracle ? "true" : "false") << (sep == oracle ? " (agrees)" : " (MISMATCH)")
                << "\n";
        },
        s);
    return kOk;
}

inline int cmd_factor(const Options &opt, std::ostream &out) {
    auto s = tripartite(read_state(opt), opt);
    std::visit(
        [&](const auto &state) {
            auto f = extract_factors(state, opt.tolerance());
            if (opt.json) {
                json j = factorization_to_json(f);
                j["residual"] = factor_residual(state, f);
                out << j.dump(2) << "\n";
                return;
            }
            print_factors(out, f);
            out << "residual:   " << fmt_double(factor_residual(state, f)) << "\n";
        },
        s);
    return kOk;
}

template <Backend B>
int run_random(const Options &opt, StateKind kind, std::ostream &out) {
    std::mt19937_64 rng(opt.seed);
    auto tol = opt.tolerance();
    size_t mismatches = 0;
    size_t separable = 0;
    json states = json::array();
    for (size_t n = 0; n < opt.count; n++) {
        auto s = random_state<B>(kind, rng);
        bool sep = is_separable(s, tol);
        bool oracle = rank1_oracle(s, tol);
        json rec = {{"index", n}, {"separable", sep}, {"rank1", oracle}, {"oracle_agrees", sep == oracle}};
        if (sep) {
            separable++;
            try {
                auto f = extract_factors(s, tol);
                rec["factor_residual"] = factor_residual(s, f);
            } catch (const Error &e) {
                rec["factor_error"] = e.what();
                mismatches++;
            }
        }
        mismatches += sep != oracle;
        if (opt.json) {
            rec["state"] = state_to_json(s);
            rec["classification"] = classification_to_json(classify(s), tol);
            states.push_back(rec);
        } else {
            out << std::setw(5) << n << "  " << (sep ? "separable " : "entangled ") << (sep == oracle ? "" : "MISMATCH ")
                << describe_state(s) << "\n";
        }
    }
    if (opt.json) {
        out << json{{"seed", opt.seed},
                    {"kind", std::string(state_kind_name(kind))},
                    {"backend", std::string(B::name)},
                    {"count", opt.count},
                    {"separable", separable},
                    {"mismatches", mismatches},
                    {"states", states}}
                   .dump(2)
            << "\n";
    } else {
        out << "count " << opt.count << ", separable " << separable << ", mismatches " << mismatches << "\n";
    }
    return mismatches == 0 ? kOk : kUsage;
}

inline int cmd_random(const Options &opt, std::ostream &out) {
    auto kind = parse_state_kind(opt.kind);
    if (!kind) {
        throw Exit{kUsage, "unknown --kind '" + opt.kind + "'"};
    }
    bool floating = opt.floating || (*kind == StateKind::LuProduct && !opt.exact);
    if (*kind == StateKind::LuProduct && opt.exact) {
        throw Exit{kBackendMismatch, "BackendMismatch: lu-product states are floating only"};
    }
    return floating ? run_random<Approx>(opt, *kind, out) : run_random<Exact>(opt, *kind, out);
}

inline int exit_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::BackendMismatch:
            return kBackendMismatch;
        case ErrorCode::InvalidInput:
            return kParse;
        default:
            return kPrecondition;
    }
}

}  // namespace detail

/// Runs one invocation; all output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Classify and test pure three-qubit states"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App *cmd, bool needs_state) {
        cmd->add_flag("--json", opt.json, "Machine-readable output");
        auto *ex = cmd->add_flag("--exact", opt.exact, "Exact Gaussian-rational arithmetic");
        auto *fl = cmd->add_flag("--float", opt.floating, "Double-precision arithmetic");
        ex->excludes(fl);
        cmd->add_option("--eps", opt.eps, "Zero threshold on squared moduli (floating only)");
        if (needs_state) {
            cmd->add_option("expr", opt.expr, "Ket expression, e.g. \"(|000>+|111>)/sqrt(2)\"");
            cmd->add_option("--json-state", opt.json_state, "Read the state from a JSON file");
        }
    };

    auto *classify_cmd = app.add_subcommand("classify", "Print the 7-element classification list");
    add_common(classify_cmd, true);
    auto *table_cmd = app.add_subcommand("table", "Recompute the reference classification table");
    add_common(table_cmd, false);
    auto *measure_cmd = app.add_subcommand("measure", "Collapse one qubit in the computational basis");
    add_common(measure_cmd, true);
    measure_cmd->add_option("--qubit", opt.qubit, "Qubit 1, 2 or 3")->required();
    measure_cmd->add_option("--outcome", opt.outcome, "Outcome 0 or 1")->required();
    auto *transform_cmd = app.add_subcommand("transform", "Apply local unitaries U1 (x) U2 (x) U3");
    add_common(transform_cmd, true);
    transform_cmd->add_option("--u1", opt.u1, "JSON 2x2 matrix, 'I' or 'random'");
    transform_cmd->add_option("--u2", opt.u2, "JSON 2x2 matrix, 'I' or 'random'");
    transform_cmd->add_option("--u3", opt.u3, "JSON 2x2 matrix, 'I' or 'random'");
    transform_cmd->add_option("--seed", opt.seed, "Seed for random unitaries");
    auto *check_cmd = app.add_subcommand("check-sep", "Decide full separability");
    add_common(check_cmd, true);
    auto *factor_cmd = app.add_subcommand("factor", "Extract product factors of a separable state");
    add_common(factor_cmd, true);
    auto *random_cmd = app.add_subcommand("random", "Generate random states and cross-check the separability test");
    add_common(random_cmd, false);
    random_cmd->add_option("--count", opt.count, "Number of states");
    random_cmd->add_option("--seed", opt.seed, "Generator seed");
    random_cmd->add_option("--kind", opt.kind, "product|generic|sparse|case3|wlike|lu-product|mixed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*classify_cmd) {
            return detail::cmd_classify(opt, out);
        }
        if (*table_cmd) {
            return detail::cmd_table(opt, out);
        }
        if (*measure_cmd) {
            return detail::cmd_measure(opt, out);
        }
        if (*transform_cmd) {
            return detail::cmd_transform(opt, out);
        }
        if (*check_cmd) {
            return detail::cmd_check_sep(opt, out);
        }
        if (*factor_cmd) {
            return detail::cmd_factor(opt, out);
        }
        if (*random_cmd) {
            return detail::cmd_random(opt, out);
        }
    } catch (const detail::Exit &e) {
        err << e.message << "\n";
        return e.code;
    } catch (const ParseError &e) {
        err << e.what() << "\n";
        return kParse;
    } catch (const Error &e) {
        err << e.what() << "\n";
        return detail::exit_for(e);
    }
    return kUsage;
}

}  // namespace triqubit::cli
