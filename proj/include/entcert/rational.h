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

#ifndef ENTCERT_RATIONAL_H
#define ENTCERT_RATIONAL_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace entcert {

/// Exact rational number kept in canonical reduced form (gcd(|num|, den) = 1, den > 0).
///
/// Used as the key type of every outcome grid so that witness values reached
/// along different paths (e.g. 9/25 + 1 + 1 and 1 + 9/25 + 1) compare equal.
/// Arithmetic is carried out in 128 bits and throws std::overflow_error if the
/// reduced result does not fit in 64 bits.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    double to_double() const;
    bool is_integer() const { return den_ == 1; }

    /// "59/25", "-1/2", or "3" for integers.
    std::string str() const;
    /// Fixed-point decimal rounding, e.g. decimal(2) of 59/25 is "2.36".
    std::string decimal(int digits) const;

    /// Parses "p/q", an integer, or a finite decimal literal ("2.36", "-0.5", "1e-3").
    static Rational parse(std::string_view text);
    /// Exact value of the shortest decimal that round-trips to `value` (0.1 -> 1/10).
    static Rational from_double(double value);

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

   private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &out, const Rational &value);

}  // namespace entcert

template <>
struct std::hash<entcert::Rational> {
    std::size_t operator()(const entcert::Rational &r) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(r.numerator());
        return h ^ (std::hash<std::int64_t>{}(r.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

#endif  // ENTCERT_RATIONAL_H
