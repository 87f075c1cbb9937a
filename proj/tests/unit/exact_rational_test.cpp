// Copyright 2026 The tentlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tentlab/binary/exact_rational.hpp"

#include <gtest/gtest.h>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

ExactRational frac(long n, long d) { return ExactRational(mpz_class(n), mpz_class(d)); }

TEST(ParseDecimal, ExactDecimalFractions) {
  EXPECT_EQ(parse_decimal("0.4"), frac(2, 5));
  EXPECT_EQ(parse_decimal("67.2"), frac(336, 5));
  EXPECT_EQ(parse_decimal("100"), ExactRational(100));
  EXPECT_EQ(parse_decimal("100.0001"), frac(1000001, 10000));
  EXPECT_EQ(parse_decimal(".5"), frac(1, 2));
  EXPECT_EQ(parse_decimal("12."), ExactRational(12));
}

TEST(ParseDecimal, DyadicNumeral) {
  // 0.23828125 * 10^8 = 23828125 and 23828125 * 256 = 6100000000 = 61 * 10^8.
  EXPECT_EQ(23828125LL * 256, 61LL * 100000000);
  EXPECT_EQ(parse_decimal("4.23828125"), frac(1085, 256));
  EXPECT_TRUE(parse_decimal("4.23828125").is_dyadic());
}

TEST(ParseDecimal, RejectsMalformedAndNegative) {
  EXPECT_THROW(parse_decimal(""), ParseError);
  EXPECT_THROW(parse_decimal("."), ParseError);
  EXPECT_THROW(parse_decimal("1.2.3"), ParseError);
  EXPECT_THROW(parse_decimal("1e5"), ParseError);
  EXPECT_THROW(parse_decimal(" 1"), ParseError);
  EXPECT_THROW(parse_decimal("+1"), ParseError);
  EXPECT_THROW(parse_decimal("-0.4"), DomainError);
}

TEST(ExactRational, RejectsNegativeResults) {
  EXPECT_THROW(ExactRational(-1), DomainError);
  EXPECT_THROW(ExactRational(1) - ExactRational(2), DomainError);
  EXPECT_THROW(ExactRational(mpz_class(1), mpz_class(0)), DomainError);
  EXPECT_EQ(abs_diff(ExactRational(1), ExactRational(3)), ExactRational(2));
}

TEST(ExactRational, CanonicalForm) {
  const ExactRational x(mpz_class(6), mpz_class(4));
  EXPECT_EQ(x.numerator(), 3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(x.to_fraction_string(), "3/2");
  EXPECT_TRUE(ExactRational(96).is_even_integer());
  EXPECT_FALSE(ExactRational(19).is_even_integer());
}

TEST(DecimalRendering, TerminatingAndNot) {
  EXPECT_EQ(to_terminating_decimal(frac(3, 8)), "0.375");
  EXPECT_EQ(to_terminating_decimal(frac(17203, 256)), "67.19921875");
  EXPECT_EQ(to_terminating_decimal(frac(336, 5)), "67.2");
  EXPECT_EQ(to_terminating_decimal(ExactRational(0)), "0");
  EXPECT_EQ(to_terminating_decimal(frac(1, 3)), std::nullopt);
  EXPECT_EQ(to_display_string(frac(1, 3)), "1/3");
  EXPECT_EQ(to_decimal_approx(frac(2, 3), 4), "0.6666");
  EXPECT_EQ(to_decimal_approx(frac(1, 1000), 2), "0");
}

TEST(BitsToHold, SmallestPowerAbove) {
  EXPECT_EQ(bits_to_hold(ExactRational(1)), 1U);
  EXPECT_EQ(bits_to_hold(ExactRational(100)), 7U);
  EXPECT_EQ(bits_to_hold(ExactRational(127)), 7U);
  EXPECT_EQ(bits_to_hold(ExactRational(128)), 8U);
  EXPECT_EQ(bits_to_hold(frac(1, 2)), 0U);
}

}  // namespace
}  // namespace tentlab
