// Copyright 2026 The qrypt0 Authors
//
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

#include "qrypt0/gf256.hpp"

#include <gtest/gtest.h>

#include "qrypt0/error.hpp"
#include "support/test_support.hpp"

namespace qrypt0::gf256 {
namespace {

using qrypt0::testing::peasant_mul;

TEST(Gf256Test, TableMultiplyMatchesBitwiseOracleExhaustively) {
  int mismatches = 0;
  for (int a = 0; a < 256; ++a)
    for (int b = 0; b < 256; ++b)
      if (mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) !=
          peasant_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)))
        ++mismatches;
  EXPECT_EQ(mismatches, 0);
}

TEST(Gf256Test, IdentityAndZero) {
  for (int x = 0; x < 256; ++x) {
    const auto v = static_cast<std::uint8_t>(x);
    EXPECT_EQ(mul(v, 1), v);
    EXPECT_EQ(mul(v, 0), 0);
    EXPECT_EQ(add(v, v), 0);
  }
}

TEST(Gf256Test, InversesAndLogTables) {
  for (int x = 1; x < 256; ++x) {
    const auto v = static_cast<std::uint8_t>(x);
    EXPECT_EQ(mul(v, inv(v)), 1) << x;
    EXPECT_EQ(exp(log(v)), v) << x;
    EXPECT_EQ(div(mul(v, 0x53), 0x53), v);
  }
  EXPECT_THROW(inv(0), Error);
  EXPECT_THROW(log(0), Error);
}

TEST(Gf256Test, GeneratorHasFullOrder) {
  std::uint8_t x = 1;
  for (int i = 1; i < 255; ++i) {
    x = peasant_mul(x, 2);
    EXPECT_NE(x, 1) << "order divides " << i;
  }
  EXPECT_EQ(peasant_mul(x, 2), 1);
  EXPECT_EQ(exp(255), 1);
  EXPECT_EQ(exp(-1), exp(254));
}

TEST(PolyTest, NormalizesLeadingZeros) {
  const Poly p(std::vector<std::uint8_t>{0, 0, 3, 1});
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_EQ(p.coeff(1), 3);
  EXPECT_TRUE(Poly(std::vector<std::uint8_t>{0, 0}).is_zero());
  EXPECT_TRUE(Poly().is_zero());
}

TEST(PolyTest, EvalMultiplyMod) {
  const Poly a(std::vector<std::uint8_t>{1, 2});   // x + 2
  const Poly b(std::vector<std::uint8_t>{1, 4});   // x + 4
  const Poly product = a * b;
  for (int x = 0; x < 256; ++x) {
    const auto v = static_cast<std::uint8_t>(x);
    EXPECT_EQ(product.eval(v), peasant_mul(a.eval(v), b.eval(v)));
  }
  EXPECT_TRUE(product.mod(a).is_zero());
  EXPECT_EQ((product + Poly(std::vector<std::uint8_t>{5})).mod(b), Poly(std::vector<std::uint8_t>{5}));
}

TEST(PolyTest, DerivativeKeepsOddPowers) {
  const Poly p(std::vector<std::uint8_t>{7, 6, 5, 4});  // 7x^3 + 6x^2 + 5x + 4
  EXPECT_EQ(p.derivative(), Poly(std::vector<std::uint8_t>{7, 0, 5}));
}

}  // namespace
}  // namespace qrypt0::gf256
