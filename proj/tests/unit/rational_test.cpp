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

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

namespace resv {
namespace {

TEST(Rational, NormalizesSignAndLowestTerms)
{
    const Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_EQ(Rational(0, 5).den(), 1);
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ExactArithmetic)
{
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_EQ(Rational(2) - Rational(1, 10), Rational(19, 10));
}

TEST(Rational, Ordering)
{
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(max(Rational(5, 2), Rational(2)), Rational(5, 2));
    EXPECT_EQ(min(Rational(5, 2), Rational(2)), Rational(2));
}

TEST(Rational, FloorCeil)
{
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, OverflowIsReportedNotRounded)
{
    const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
    EXPECT_THROW(big * Rational(3), RationalOverflow);
    EXPECT_THROW(Rational(1, std::numeric_limits<std::int64_t>::max()) + Rational(1, std::numeric_limits<std::int64_t>::max() - 1),
                 RationalOverflow);
}

TEST(Rational, ParseAndFormat)
{
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse(" 1/1000 "), Rational(1, 1000));
    EXPECT_EQ(Rational(19, 10).str(), "19/10");
    EXPECT_EQ(Rational(6).str(), "6");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("a/b"), std::invalid_argument);
}

// Expected strings from Python's decimal module, ROUND_HALF_EVEN.
TEST(Rational, DecimalRoundHalfEven)
{
    EXPECT_EQ(Rational(1, 42).decimal(), "0.0238095238095238");
    EXPECT_EQ(Rational(2, 3).decimal(), "0.666666666666667");
    EXPECT_EQ(Rational(-1, 3).decimal(), "-0.333333333333333");
    EXPECT_EQ(Rational(159, 480).decimal(), "0.33125");
    EXPECT_EQ(Rational(31, 80).decimal(), "0.3875");
    EXPECT_EQ(Rational(1, 8).decimal(2), "0.12");
    EXPECT_EQ(Rational(3, 8).decimal(2), "0.38");
    EXPECT_EQ(Rational(5, 2).decimal(1), "2");
    EXPECT_EQ(Rational(7, 2).decimal(1), "4");
    EXPECT_EQ(Rational(25).decimal(1), "20");
    EXPECT_EQ(Rational(35).decimal(1), "40");
    EXPECT_EQ(Rational(123456789012345678).decimal(), "123456789012346000");
    EXPECT_EQ(Rational(999999, 1000000).decimal(3), "1");
    EXPECT_EQ(Rational(0).decimal(), "0");
    EXPECT_EQ(Rational(6).decimal(), "6");
}

TEST(Rational, Log2Helpers)
{
    EXPECT_EQ(ceil_log2(Rational(1)), 0);
    EXPECT_EQ(ceil_log2(Rational(2)), 1);
    EXPECT_EQ(ceil_log2(Rational(3)), 2);
    EXPECT_EQ(ceil_log2(Rational(8)), 3);
    EXPECT_EQ(ceil_log2(Rational(9, 2)), 3);
    EXPECT_EQ(exact_log2(Rational(32)), 5);
    EXPECT_EQ(exact_log2(Rational(1, 4)), -2);
    EXPECT_FALSE(exact_log2(Rational(6)).has_value());
    EXPECT_EQ(pow2(10), Rational(1024));
}

TEST(RationalProperty, ParseInvertsFormat)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000'000LL);
    for (int trial = 0; trial < 5000; ++trial) {
        const Rational r(num(rng), den(rng));
        ASSERT_EQ(Rational::parse(r.str()), r) << r;
    }
}

TEST(RationalProperty, FieldLaws)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> small(-500, 500);
    std::uniform_int_distribution<std::int64_t> pos(1, 500);
    for (int trial = 0; trial < 2000; ++trial) {
        const Rational a(small(rng), pos(rng)), b(small(rng), pos(rng)), c(small(rng), pos(rng));
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - b + b, a);
        if (!b.is_zero()) {
            ASSERT_EQ(a / b * b, a);
        }
        ASSERT_EQ(a < b, a.num() * b.den() < b.num() * a.den());
    }
}

} // namespace
} // namespace resv
