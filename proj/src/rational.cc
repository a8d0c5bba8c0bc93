// Copyright 2026 The entcert Authors
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

#include "entcert/rational.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace entcert {
namespace {

using wide = __int128;

wide wide_abs(wide x) { return x < 0 ? -x : x; }

wide wide_gcd(wide a, wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational::Rational(std::int64_t numerator) : num_(numerator), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(wide numerator, wide denominator) {
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    wide g = wide_gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (numerator > kMax || numerator < kMin || denominator > kMax) {
        throw std::overflow_error("Rational: value does not fit in 64 bits");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
}

double Rational::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
    if (digits < 0 || digits > 18) {
        throw std::invalid_argument("Rational::decimal: digits out of range");
    }
    wide scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    wide n = wide_abs(static_cast<wide>(num_)) * scale;
    wide q = n / den_;
    wide r = n % den_;
    if (2 * r >= den_) ++q;  // half away from zero
    wide whole = q / scale;
    wide frac = q % scale;
    std::string out = (num_ < 0 && q != 0) ? "-" : "";
    out += std::to_string(static_cast<long long>(whole));
    if (digits > 0) {
        std::string f = std::to_string(static_cast<long long>(frac));
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("Rational::parse: cannot parse '" + std::string(text) + "'");
    };
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) return fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t p = 0, q = 0;
        auto lhs = text.substr(0, slash);
        auto rhs = text.substr(slash + 1);
        auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), p);
        auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), q);
        if (r1.ec != std::errc() || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc() ||
            r2.ptr != rhs.data() + rhs.size()) {
            return fail();
        }
        return Rational(p, q);
    }

    // Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    wide mantissa = 0;
    int exponent = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            any_digit = true;
            if (mantissa > kMax) return fail();
            mantissa = mantissa * 10 + (c - '0');
            if (seen_point) --exponent;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) return fail();
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') return fail();
        ++i;
        int e = 0;
        auto rest = text.substr(i);
        if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
        auto res = std::from_chars(rest.data(), rest.data() + rest.size(), e);
        if (res.ec != std::errc() || res.ptr != rest.data() + rest.size()) return fail();
        exponent += e;
    }
    if (exponent > 36 || exponent < -36) return fail();
    wide num = negative ? -mantissa : mantissa;
    wide den = 1;
    for (; exponent > 0; --exponent) num *= 10;
    for (; exponent < 0; ++exponent) den *= 10;
    return from_wide(num, den);
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("Rational::from_double: non-finite value");
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational &Rational::operator+=(const Rational &o) {
    *this = from_wide(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                      static_cast<wide>(den_) * o.den_);
    return *this;
}

Rational &Rational::operator-=(const Rational &o) {
    *this = from_wide(static_cast<wide>(num_) * o.den_ - static_cast<wide>(o.num_) * den_,
                      static_cast<wide>(den_) * o.den_);
    return *this;
}

Rational &Rational::operator*=(const Rational &o) {
    *this = from_wide(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
    return *this;
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    *this = from_wide(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &out, const Rational &value) { return out << value.str(); }

}  // namespace entcert
