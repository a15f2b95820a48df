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

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "triqubit/errors.hpp"

namespace triqubit {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() { return Error(ErrorCode::InvalidInput, "not a rational: '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw fail();
    }
    size_t slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        size_t start = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            start = 1;
        }
        if (s.size() == start) {
            return false;
        }
        for (size_t k = start; k < s.size(); k++) {
            if (s[k] < '0' || s[k] > '9') {
                return false;
            }
        }
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
        throw fail();
    }
    std::string num_str(num);
    if (num_str[0] == '+') {
        num_str.erase(0, 1);
    }
    mpz_class n(num_str, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational &r) {
    return r.get_str();
}

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational re_part, Rational im_part = 0) : re(std::move(re_part)), im(std::move(im_part)) {
    }
    GaussianRational(long value) : re(value), im(0) {
    }
    GaussianRational(int value) : re(value), im(0) {
    }

    bool is_zero() const {
        return sgn(re) == 0 && sgn(im) == 0;
    }

    GaussianRational conj() const {
        return {re, -im};
    }

    /// Squared modulus; always a nonnegative rational.
    Rational abs2() const {
        return Rational(re * re + im * im);
    }

    GaussianRational &operator+=(const GaussianRational &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o) {
        Rational d = o.abs2();
        if (sgn(d) == 0) {
            throw Error(ErrorCode::DivisionByZero, "division by zero Gaussian rational");
        }
        *this *= o.conj();
        re /= d;
        im /= d;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) {
        return a /= b;
    }
    friend GaussianRational operator-(const GaussianRational &a) {
        return {-a.re, -a.im};
    }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend std::ostream &operator<<(std::ostream &out, const GaussianRational &z) {
        return out << '(' << z.re.get_str() << ',' << z.im.get_str() << ')';
    }
};

/// Zero threshold for the floating backend, applied to squared moduli of
/// normalized quantities. The exact backend ignores it.
struct Tolerance {
    double eps = 1e-10;
};

/// Exact backend: Gaussian-rational amplitudes, rational reals.
struct Exact {
    using scalar_type = GaussianRational;
    using real_type = Rational;
    static constexpr std::string_view name = "exact";

    static real_type abs2(const scalar_type &z) {
        return z.abs2();
    }
    static scalar_type conj(const scalar_type &z) {
        return z.conj();
    }
    static bool is_zero(const scalar_type &z) {
        return z.is_zero();
    }
    static bool is_zero(const real_type &v, const Tolerance &) {
        return sgn(v) == 0;
    }
    static bool is_positive(const real_type &v) {
        return sgn(v) > 0;
    }
    static double to_double(const real_type &v) {
        return v.get_d();
    }
    static scalar_type from_real(const real_type &v) {
        return {v, 0};
    }
};

/// Floating backend: std::complex<double> amplitudes.
struct Approx {
    using scalar_type = std::complex<double>;
    using real_type = double;
    static constexpr std::string_view name = "approx";

    static real_type abs2(const scalar_type &z) {
        return std::norm(z);
    }
    static scalar_type conj(const scalar_type &z) {
        return std::conj(z);
    }
    static bool is_zero(const scalar_type &z) {
        return z == scalar_type{};
    }
    static bool is_zero(real_type v, const Tolerance &tol) {
        return v <= tol.eps;
    }
    static bool is_positive(real_type v) {
        return v > 0;
    }
    static double to_double(real_type v) {
        return v;
    }
    static scalar_type from_real(real_type v) {
        return {v, 0};
    }
};

template <typename B>
concept Backend = requires(const typename B::scalar_type &z, const typename B::real_type &r, const Tolerance &tol) {
    { B::abs2(z) } -> std::convertible_to<typename B::real_type>;
    { B::conj(z) } -> std::convertible_to<typename B::scalar_type>;
    { B::is_zero(z) } -> std::same_as<bool>;
    { B::is_zero(r, tol) } -> std::same_as<bool>;
    { B::to_double(r) } -> std::same_as<double>;
};

/// One-way conversion from the exact to the floating representation.
inline std::complex<double> to_approx(const GaussianRational &z) {
    return {z.re.get_d(), z.im.get_d()};
}

}  // namespace triqubit
