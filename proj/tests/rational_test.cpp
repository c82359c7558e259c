// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flagcert/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>

namespace flagcert {
namespace {

TEST(RationalTest, ParsesCanonicalForms) {
  EXPECT_EQ(Rational::parse("1/64"), Rational(1, 64));
  EXPECT_EQ(Rational::parse("-3/128"), Rational(-3, 128));
  EXPECT_EQ(Rational::parse("0"), Rational(0));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(RationalTest, RejectsNonCanonicalText) {
  for (const char* bad : {"4/128", "2/2", "1/1", "3/0", "1/-2", "+1", "01", "-0", "1/02", "", "/", "1/", "/2",
                          " 1", "1 ", "1.5", "0x10", "--1", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, NonReducedMessageNamesCanonicalForm) {
  try {
    Rational::parse("4/128");
    FAIL() << "accepted 4/128";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("\"1/32\""), std::string::npos) << e.what();
  }
}

TEST(RationalTest, ConstructorNormalises) {
  EXPECT_EQ(Rational(4, 128).to_string(), "1/32");
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(0, -5).to_string(), "0");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, ArithmeticAndOrdering) {
  const Rational a(1, 6), b(1, 12);
  EXPECT_EQ(a + b, Rational(1, 4));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(1, 72));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 6));
  EXPECT_LT(b, a);
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(a.sign(), 1);
  EXPECT_EQ((-a).sign(), -1);
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_THROW(a / Rational(0), std::exception);
  EXPECT_DOUBLE_EQ(Rational(1, 64).to_double(), 0.015625);
}

TEST(RationalTest, StreamsCanonicalText) {
  std::ostringstream s;
  s << Rational(-10, 4);
  EXPECT_EQ(s.str(), "-5/2");
}

TEST(RationalTest, TextRoundTripOnGrid) {
  for (int p = -40; p <= 40; ++p) {
    for (int q = 1; q <= 40; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
  }
}

TEST(RationalTest, FallingFactorialMatchesFactorialRatio) {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(falling_factorial(n, k) * factorial(n - k), factorial(n));
    EXPECT_EQ(falling_factorial(n, n + 1), 0);
  }
  EXPECT_EQ(falling_factorial(150, 6), BigInt("10293840522000"));
}

}  // namespace
}  // namespace flagcert
