/*
 * Copyright 2026 The resvmech Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RESV_RATIONAL_HPP
#define RESV_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resv {

/// Raised when an exact result does not fit the 64-bit numerator/denominator.
class RationalOverflow : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

/**
 * \brief Exact rational number with 64-bit numerator and denominator.
 *
 * Always kept in lowest terms with a positive denominator. Intermediate
 * products are formed in 128 bits; a result that cannot be represented
 * after reduction raises RationalOverflow instead of rounding.
 */
class Rational
{
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_positive() const noexcept { return num_ > 0; }
    [[nodiscard]] constexpr bool is_negative() const noexcept { return num_ < 0; }

    [[nodiscard]] std::int64_t floor() const noexcept;
    [[nodiscard]] std::int64_t ceil() const noexcept;
    [[nodiscard]] double to_double() const noexcept;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

    /// "n" when integral, otherwise "n/d".
    [[nodiscard]] std::string str() const;

    /// Decimal rendering with \p digits significant digits, round-half-even, trailing zeros trimmed.
    [[nodiscard]] std::string decimal(int digits = 15) const;

    /// Accepts "n", "-n", "n/d" (d may be unreduced, must be non-zero).
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_{0};
    std::int64_t den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

[[nodiscard]] Rational abs(const Rational& r);
[[nodiscard]] const Rational& min(const Rational& a, const Rational& b);
[[nodiscard]] const Rational& max(const Rational& a, const Rational& b);

/// 2^e for e in [0, 62].
[[nodiscard]] Rational pow2(int e);

/// Smallest L >= 0 with 2^L >= x, for x >= 1.
[[nodiscard]] int ceil_log2(const Rational& x);

/// log2(x) when x is an exact (possibly negative) power of two.
[[nodiscard]] std::optional<int> exact_log2(const Rational& x);

} // namespace resv

template <>
struct std::hash<resv::Rational>
{
    std::size_t operator()(const resv::Rational& r) const noexcept
    {
        const auto h1 = std::hash<std::int64_t>{}(r.num());
        const auto h2 = std::hash<std::int64_t>{}(r.den());
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};

#endif // RESV_RATIONAL_HPP
