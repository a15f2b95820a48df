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

// Ket-expression front end. Whitespace-insensitive grammar:
//
//   expr    := sum EOF
//   sum     := ('+' | '-')? term (('+' | '-') term)*
//   term    := (coeff '*'?)? (ket | '(' sum ')') ('/' divisor)*
//   coeff   := (INT ('*'? 'i')? | 'i') ('/' divisor)* 'i'?
//   divisor := POSINT | 'sqrt' '(' POSINT ')'
//   ket     := '|' BIT BIT BIT? '>'
//
// Examples: "(|000> + |111>)/sqrt(2)", "1/2(|100>+|010>+|001>+|111>)",
// "i/2|01> - 1/2|10>". Every term's irrational part must reduce to one common
// 1/sqrt(m), which becomes the global prefactor; anything else is rejected.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "triqubit/state.hpp"

namespace triqubit {

enum class ParseErrorKind { Syntax, MixedArity, EmptyState, UnsupportedIrrational };

constexpr std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax:
            return "SyntaxError";
        case ParseErrorKind::MixedArity:
            return "MixedArity";
        case ParseErrorKind::EmptyState:
            return "EmptyState";
        case ParseErrorKind::UnsupportedIrrational:
            return "UnsupportedIrrational";
    }
    return "ParseError";
}

class ParseError : public std::runtime_error {
   public:
    ParseError(ParseErrorKind kind, size_t offset, const std::string &message, std::vector<std::string> expected = {})
        : std::runtime_error(format(kind, offset, message, expected)),
          kind_(kind),
          offset_(offset),
          expected_(std::move(expected)) {
    }

    ParseErrorKind kind() const noexcept {
        return kind_;
    }
    /// Byte offset into the input where the problem was detected.
    size_t offset() const noexcept {
        return offset_;
    }
    const std::vector<std::string> &expected() const noexcept {
        return expected_;
    }

   private:
    static std::string format(ParseErrorKind kind, size_t offset, const std::string &message,
                              const std::vector<std::string> &expected) {
        std::string out = std::string(to_string(kind)) + " at byte " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
            out += " (expected ";
            for (size_t n = 0; n < expected.size(); n++) {
                out += (n ? ", " : "") + expected[n];
            }
            out += ")";
        }
        return out;
    }

    ParseErrorKind kind_;
    size_t offset_;
    std::vector<std::string> expected_;
};

struct KetTerm {
    GaussianRational coeff;
    std::string basis;

    friend bool operator==(const KetTerm &, const KetTerm &) = default;
};

/// (sum of coeff |basis>) / sqrt(radicand). Terms are merged by basis, sorted,
/// nonzero, and share one arity; radicand is squarefree.
struct KetExpr {
    std::vector<KetTerm> terms;
    uint64_t radicand = 1;

    size_t arity() const {
        return terms.empty() ? 0 : terms.front().basis.size();
    }

    friend bool operator==(const KetExpr &, const KetExpr &) = default;
};

/// n = k^2 * m with m squarefree; returns {k, m}.
inline std::pair<uint64_t, uint64_t> squarefree_split(uint64_t n) {
    uint64_t k = 1;
    uint64_t m = 1;
    for (uint64_t p = 2; p * p <= n; p++) {
        while (n % (p * p) == 0) {
            n /= p * p;
            k *= p;
        }
        if (n % p == 0) {
            n /= p;
            m *= p;
        }
    }
    return {k, m * n};
}

namespace detail {

inline constexpr uint64_t kMaxRadicand = uint64_t{1} << 32;
inline constexpr int kMaxDepth = 64;

enum class Tok { Int, Plus, Minus, Star, Slash, LParen, RParen, Bar, Gt, I, Sqrt, End };

struct Token {
    Tok kind;
    size_t offset;
    std::string_view text;
};

inline std::string describe(Tok t) {
    switch (t) {
        case Tok::Int:
            return "integer";
        case Tok::Plus:
            return "'+'";
        case Tok::Minus:
            return "'-'";
        case Tok::Star:
            return "'*'";
        case Tok::Slash:
            return "'/'";
        case Tok::LParen:
            return "'('";
        case Tok::RParen:
            return "')'";
        case Tok::Bar:
            return "'|'";
        case Tok::Gt:
            return "'>'";
        case Tok::I:
            return "'i'";
        case Tok::Sqrt:
            return "'sqrt'";
        case Tok::End:
            return "end of input";
    }
    return "?";
}

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    size_t p = 0;
    while (p < text.size()) {
        char c = text[p];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            p++;
            continue;
        }
        if (c >= '0' && c <= '9') {
            size_t start = p;
            while (p < text.size() && text[p] >= '0' && text[p] <= '9') {
                p++;
            }
            out.push_back({Tok::Int, start, text.substr(start, p - start)});
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            size_t start = p;
            while (p < text.size() && ((text[p] >= 'a' && text[p] <= 'z') || (text[p] >= 'A' && text[p] <= 'Z'))) {
                p++;
            }
            std::string_view word = text.substr(start, p - start);
            if (word == "i") {
                out.push_back({Tok::I, start, word});
            } else if (word == "sqrt") {
                out.push_back({Tok::Sqrt, start, word});
            } else {
                throw ParseError(ParseErrorKind::Syntax, start, "unknown word '" + std::string(word) + "'",
                                 {"'i'", "'sqrt'"});
            }
            continue;
        }
        Tok kind;
        switch (c) {
            case '+':
                kind = Tok::Plus;
                break;
            case '-':
                kind = Tok::Minus;
                break;
            case '*':
                kind = Tok::Star;
                break;
            case '/':
                kind = Tok::Slash;
                break;
            case '(':
                kind = Tok::LParen;
                break;
            case ')':
                kind = Tok::RParen;
                break;
            case '|':
                kind = Tok::Bar;
                break;
            case '>':
                kind = Tok::Gt;
                break;
            default:
                throw ParseError(ParseErrorKind::Syntax, p, "unexpected character");
        }
        out.push_back({kind, p, text.substr(p, 1)});
        p++;
    }
    out.push_back({Tok::End, text.size(), {}});
    return out;
}

// value / sqrt(radicand), radicand squarefree.
struct Coef {
    GaussianRational value{1};
    uint64_t radicand = 1;
};

struct Leaf {
    Coef coef;
    std::string basis;
};

class Parser {
   public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {
    }

    std::vector<Leaf> parse() {
        auto leaves = sum(0);
        if (peek().kind != Tok::End) {
            fail({"'+'", "'-'", describe(Tok::End)});
        }
        return leaves;
    }

   private:
    const Token &peek(size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token &take() {
        const Token &t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) {
            pos_++;
        }
        return t;
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token &t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
        throw ParseError(ParseErrorKind::Syntax, t.offset, "unexpected " + found, std::move(expected));
    }
    const Token &expect(Tok kind) {
        if (peek().kind != kind) {
            fail({describe(kind)});
        }
        return take();
    }

    static void multiply(Coef &into, const Coef &by, size_t offset) {
        into.value *= by.value;
        uint64_t g = std::gcd(into.radicand, by.radicand);
        uint64_t a = into.radicand / g;
        uint64_t b = by.radicand / g;
        if (b != 0 && a > std::numeric_limits<uint64_t>::max() / b) {
            throw ParseError(ParseErrorKind::UnsupportedIrrational, offset, "radicand too large");
        }
        // sqrt(g a) sqrt(g b) = g sqrt(a b), and a b stays squarefree.
        into.value /= GaussianRational(Rational(g));
        into.radicand = a * b;
    }

    uint64_t positive_int() {
        const Token &t = peek();
        if (t.kind != Tok::Int) {
            fail({"positive integer"});
        }
        mpz_class v(std::string(t.text), 10);
        if (v == 0) {
            throw ParseError(ParseErrorKind::Syntax, t.offset, "divisor must be positive", {"positive integer"});
        }
        if (v > mpz_class(std::to_string(kMaxRadicand))) {
            throw ParseError(ParseErrorKind::UnsupportedIrrational, t.offset, "integer under sqrt too large");
        }
        take();
        return v.get_ui();
    }

    void divisor(Coef &c) {
        if (peek().kind == Tok::Sqrt) {
            size_t at = take().offset;
            expect(Tok::LParen);
            uint64_t n = positive_int();
            expect(Tok::RParen);
            auto [k, m] = squarefree_split(n);
            Coef d;
            d.value = GaussianRational(Rational(1, 1));
            d.value /= GaussianRational(Rational(static_cast<unsigned long>(k)));
            d.radicand = m;
            multiply(c, d, at);
            return;
        }
        if (peek().kind == Tok::Int) {
            const Token &t = take();
            mpz_class v(std::string(t.text), 10);
            if (v == 0) {
                throw ParseError(ParseErrorKind::Syntax, t.offset, "division by zero", {"positive integer"});
            }
            c.value /= GaussianRational(Rational(v));
            return;
        }
        fail({"positive integer", "'sqrt'"});
    }

    bool starts_coeff() const {
        return peek().kind == Tok::Int || peek().kind == Tok::I;
    }

    Coef coeff() {
        Coef c;
        bool imaginary = false;
        if (peek().kind == Tok::Int) {
            c.value = GaussianRational(Rational(mpz_class(std::string(take().text), 10)));
            if (peek().kind == Tok::I) {
                take();
                imaginary = true;
            } else if (peek().kind == Tok::Star && peek(1).kind == Tok::I) {
                take();
                take();
                imaginary = true;
            }
        } else {
            expect(Tok::I);
            imaginary = true;
        }
        while (peek().kind == Tok::Slash) {
            take();
            divisor(c);
        }
        if (!imaginary && peek().kind == Tok::I) {
            take();
            imaginary = true;
        }
        if (imaginary) {
            c.value *= GaussianRational(0, 1);
        }
        return c;
    }

    std::string ket() {
        expect(Tok::Bar);
        const Token &t = peek();
        if (t.kind != Tok::Int) {
            fail({"bits"});
        }
        for (char ch : t.text) {
            if (ch != '0' && ch != '1') {
                throw ParseError(ParseErrorKind::Syntax, t.offset, "ket labels use bits 0 and 1", {"bits"});
            }
        }
        if (t.text.size() != 2 && t.text.size() != 3) {
            throw ParseError(ParseErrorKind::Syntax, t.offset, "ket must have 2 or 3 qubits", {"2 or 3 bits"});
        }
        std::string basis(t.text);
        size_t at = t.offset;
        take();
        expect(Tok::Gt);
        if (arity_ == 0) {
            arity_ = basis.size();
        } else if (arity_ != basis.size()) {
            throw ParseError(ParseErrorKind::MixedArity, at,
                             "mixes " + std::to_string(arity_) + "- and " + std::to_string(basis.size()) +
                                 "-qubit kets");
        }
        return basis;
    }

    std::vector<Leaf> term(int depth) {
        size_t at = peek().offset;
        Coef c;
        if (starts_coeff()) {
            c = coeff();
            if (peek().kind == Tok::Star) {
                take();
            }
        }
        std::vector<Leaf> leaves;
        if (peek().kind == Tok::Bar) {
            leaves.push_back({Coef{}, ket()});
        } else if (peek().kind == Tok::LParen) {
            if (depth >= kMaxDepth) {
                throw ParseError(ParseErrorKind::Syntax, peek().offset, "nesting too deep");
            }
            take();
            leaves = sum(depth + 1);
            expect(Tok::RParen);
        } else {
            fail({"'|'", "'('"});
        }
        while (peek().kind == Tok::Slash) {
            take();
            divisor(c);
        }
        for (auto &leaf : leaves) {
            multiply(leaf.coef, c, at);
        }
        return leaves;
    }

    std::vector<Leaf> sum(int depth) {
        std::vector<Leaf> out;
        bool negate = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            negate = take().kind == Tok::Minus;
        }
        while (true) {
            if (!starts_coeff() && peek().kind != Tok::Bar && peek().kind != Tok::LParen) {
                fail({"coefficient", "'|'", "'('"});
            }
            for (auto &leaf : term(depth)) {
                if (negate) {
                    leaf.coef.value = -leaf.coef.value;
                }
                out.push_back(std::move(leaf));
            }
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                negate = take().kind == Tok::Minus;
                continue;
            }
            return out;
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    size_t arity_ = 0;
};

}  // namespace detail

/// Parses a ket expression into merged exact terms with one global
/// 1/sqrt(radicand) prefactor.
inline KetExpr parse_ket(std::string_view text) {
    auto leaves = detail::Parser(text).parse();

    std::map<std::pair<uint64_t, std::string>, GaussianRational> merged;
    for (auto &leaf : leaves) {
        auto &slot = merged[{leaf.coef.radicand, leaf.basis}];
        slot += leaf.coef.value;
    }
    KetExpr expr;
    bool have_radicand = false;
    std::map<std::string, GaussianRational> by_basis;
    for (auto &[key, value] : merged) {
        if (value.is_zero()) {
            continue;
        }
        if (!have_radicand) {
            expr.radicand = key.first;
            have_radicand = true;
        } else if (expr.radicand != key.first) {
            throw ParseError(ParseErrorKind::UnsupportedIrrational, 0,
                             "terms carry different irrational factors (sqrt(" + std::to_string(expr.radicand) +
                                 ") vs sqrt(" + std::to_string(key.first) + "))");
        }
        by_basis[key.second] = value;
    }
    if (by_basis.empty()) {
        throw ParseError(ParseErrorKind::EmptyState, 0, "all coefficients cancel");
    }
    for (auto &[basis, value] : by_basis) {
        expr.terms.push_back({value, basis});
    }
    return expr;
}

using ExactState = std::variant<TripartiteState<Exact>, BipartiteState<Exact>>;

template <size_t N>
PureState<Exact, N> to_pure_state(const KetExpr &e) {
    if (e.arity() != N) {
        throw Error(ErrorCode::InvalidInput, "expression has " + std::to_string(e.arity()) + " qubits, expected " +
                                                 std::to_string(N));
    }
    typename PureState<Exact, N>::amplitudes amps;
    for (auto &a : amps) {
        a = GaussianRational(0);
    }
    for (const auto &t : e.terms) {
        amps[std::stoul(t.basis, nullptr, 2)] += t.coeff;
    }
    if (std::all_of(amps.begin(), amps.end(), [](const GaussianRational &z) { return z.is_zero(); })) {
        throw ParseError(ParseErrorKind::EmptyState, 0, "all coefficients cancel");
    }
    return PureState<Exact, N>(amps, Rational(1, static_cast<unsigned long>(e.radicand)));
}

/// Exact state of the expression's arity, scale2 = 1/radicand.
inline ExactState to_state(const KetExpr &e) {
    if (e.arity() == 3) {
        return to_pure_state<3>(e);
    }
    return to_pure_state<2>(e);
}

inline ExactState parse_state(std::string_view text) {
    return to_state(parse_ket(text));
}

namespace detail {

inline std::string render_magnitude(const Rational &r, bool imaginary) {
    // r > 0 here.
    std::string num = r.get_num().get_str();
    std::string den = r.get_den().get_str();
    std::string out;
    if (imaginary) {
        out = (num == "1" ? "" : num) + "i";
    } else {
        out = num;
    }
    if (den != "1") {
        out += "/" + den;
    }
    if (!imaginary && num == "1" && den == "1") {
        return "";
    }
    return out;
}

}  // namespace detail

/// Text that parse_ket maps back to an identical KetExpr.
inline std::string render(const KetExpr &e) {
    std::string body;
    auto emit = [&](const Rational &part, bool imaginary, const std::string &basis) {
        if (sgn(part) == 0) {
            return;
        }
        bool negative = sgn(part) < 0;
        Rational mag = negative ? Rational(-part) : part;
        if (body.empty()) {
            body += negative ? "-" : "";
        } else {
            body += negative ? " - " : " + ";
        }
        body += detail::render_magnitude(mag, imaginary) + "|" + basis + ">";
    };
    for (const auto &t : e.terms) {
        emit(t.coeff.re, false, t.basis);
        emit(t.coeff.im, true, t.basis);
    }
    if (e.radicand == 1) {
        return body;
    }
    return "(" + body + ")/sqrt(" + std::to_string(e.radicand) + ")";
}

/// Ket expression of an exact state. sqrt(scale2) = sqrt(p/q) is written as
/// (k m / q) / sqrt(m) with p q = k^2 m.
template <size_t N>
KetExpr to_ket_expr(const PureState<Exact, N> &s) {
    mpz_class pq = s.scale2().get_num() * s.scale2().get_den();
    KetExpr e;
    Rational factor;
    if (pq.fits_ulong_p() && pq.get_ui() <= detail::kMaxRadicand) {
        auto [k, m] = squarefree_split(pq.get_ui());
        e.radicand = m;
        factor = Rational(mpz_class(static_cast<unsigned long>(k)) * static_cast<unsigned long>(m),
                          s.scale2().get_den());
    } else {
        throw Error(ErrorCode::InvalidInput, "prefactor too large to render as a ket expression");
    }
    factor.canonicalize();
    for (size_t b = 0; b < s.dimension; b++) {
        if (!s.amp(b).is_zero()) {
            e.terms.push_back({s.amp(b) * GaussianRational(factor), basis_label(b, N)});
        }
    }
    return e;
}

template <size_t N>
std::string render(const PureState<Exact, N> &s) {
    return render(to_ket_expr(s));
}

}  // namespace triqubit
