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

#include <resv/rational.hpp>

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace resv {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

std::string u128_to_string(u128 v)
{
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

// Adds one unit to the last digit of a string of decimal digits (ignoring '.').
void increment_digits(std::string& digits)
{
    for (auto i = static_cast<std::ptrdiff_t>(digits.size()) - 1; i >= 0; --i) {
        if (digits[i] == '.') continue;
        if (digits[i] == '9') {
            digits[i] = '0';
            continue;
        }
        ++digits[i];
        return;
    }
    digits.insert(digits.begin(), '1');
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den)
{
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num > kMax || num < kMin || den > kMax) {
        throw RationalOverflow("Rational: result exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

std::int64_t Rational::floor() const noexcept
{
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const noexcept
{
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

double Rational::to_double() const noexcept
{
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    const i128 g = gcd128(den_, rhs.den_);
    const i128 n = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
    const i128 d = static_cast<i128>(den_) * (rhs.den_ / g);
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    const i128 g1 = gcd128(num_, rhs.den_);
    const i128 g2 = gcd128(rhs.num_, den_);
    const i128 a = g1 == 0 ? 0 : num_ / g1;
    const i128 c = g2 == 0 ? 0 : rhs.num_ / g2;
    const i128 b = g2 == 0 ? den_ : den_ / g2;
    const i128 d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
    return *this = from_wide(a * c, b * d);
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
    Rational inv;
    inv.num_ = rhs.den_;
    inv.den_ = rhs.num_;
    if (inv.den_ < 0) {
        if (inv.num_ == std::numeric_limits<std::int64_t>::min()) throw RationalOverflow("Rational: negation overflow");
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

Rational Rational::operator-() const
{
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw RationalOverflow("Rational: negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept
{
    const i128 l = static_cast<i128>(lhs.num_) * rhs.den_;
    const i128 r = static_cast<i128>(rhs.num_) * lhs.den_;
    return l <=> r;
}

std::string Rational::str() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const
{
    if (digits < 1) throw std::invalid_argument("Rational::decimal: digits must be positive");
    if (num_ == 0) return "0";

    const bool negative = num_ < 0;
    const u128 mag = negative ? static_cast<u128>(-static_cast<i128>(num_)) : static_cast<u128>(num_);
    const u128 den = static_cast<u128>(den_);
    const u128 int_part = mag / den;
    u128 rem = mag % den;

    std::string out;
    bool round_up = false;

    const std::string int_digits = int_part == 0 ? std::string{} : u128_to_string(int_part);
    const int int_len = static_cast<int>(int_digits.size());

    if (int_len >= digits) {
        out = int_digits.substr(0, static_cast<std::size_t>(digits));
        if (int_len > digits) {
            const char first = int_digits[static_cast<std::size_t>(digits)];
            bool tail_nonzero = rem != 0;
            for (std::size_t i = static_cast<std::size_t>(digits) + 1; i < int_digits.size(); ++i) {
                tail_nonzero = tail_nonzero || int_digits[i] != '0';
            }
            if (first > '5' || (first == '5' && tail_nonzero)) {
                round_up = true;
            } else if (first == '5') {
                round_up = ((out.back() - '0') % 2) == 1;
            }
        } else {
            const u128 twice = rem * 2;
            round_up = twice > den || (twice == den && ((out.back() - '0') % 2) == 1);
        }
        if (round_up) increment_digits(out);
        out.append(static_cast<std::size_t>(int_len - digits), '0');
        return negative ? "-" + out : out;
    }

    out = int_len == 0 ? "0" : int_digits;
    out.push_back('.');
    int significant = int_len;
    while (significant < digits && rem != 0) {
        rem *= 10;
        const int d = static_cast<int>(rem / den);
        rem %= den;
        out.push_back(static_cast<char>('0' + d));
        if (significant > 0 || d != 0) ++significant;
    }
    if (rem != 0) {
        const u128 twice = rem * 2;
        const int last = out.back() - '0';
        round_up = twice > den || (twice == den && last % 2 == 1);
        if (round_up) increment_digits(out);
    }
    while (!out.empty() && out.back() == '0') out.pop_back();
    if (!out.empty() && out.back() == '.') out.pop_back();
    return negative ? "-" + out : out;
}

Rational Rational::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        std::int64_t v = 0;
        const auto* first = s.data();
        const auto* last = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (s.empty() || ec != std::errc{} || ptr != last) {
            throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
        }
        return v;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational abs(const Rational& r)
{
    return r.is_negative() ? -r : r;
}

const Rational& min(const Rational& a, const Rational& b)
{
    return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

Rational pow2(int e)
{
    if (e < 0 || e > 62) throw std::out_of_range("pow2: exponent out of range");
    return Rational(std::int64_t{1} << e);
}

int ceil_log2(const Rational& x)
{
    if (x < Rational(1)) throw std::domain_error("ceil_log2: argument below 1");
    int l = 0;
    Rational p(1);
    while (p < x) {
        p *= Rational(2);
        ++l;
    }
    return l;
}

std::optional<int> exact_log2(const Rational& x)
{
    if (!x.is_positive()) return std::nullopt;
    auto single = [](std::int64_t v) -> std::optional<int> {
        if ((v & (v - 1)) != 0) return std::nullopt;
        int e = 0;
        while (v > 1) {
            v >>= 1;
            ++e;
        }
        return e;
    };
    const auto n = single(x.num());
    const auto d = single(x.den());
    if (!n || !d) return std::nullopt;
    return *n - *d;
}

} // namespace resv
