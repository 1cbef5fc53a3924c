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

#include "qrypt0/rs_codec.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qrypt0/error.hpp"
#include "support/test_support.hpp"

namespace qrypt0::rs {
namespace {

using qrypt0::testing::error_code_of;
using qrypt0::testing::oracle_generator;
using qrypt0::testing::oracle_parity;
using qrypt0::testing::random_bytes;

std::vector<std::uint8_t> codeword_of(const std::vector<std::uint8_t>& data, std::size_t ec) {
  auto word = data;
  const auto parity = encode(data, ec);
  word.insert(word.end(), parity.begin(), parity.end());
  return word;
}

void corrupt(std::vector<std::uint8_t>& word, std::size_t count, std::mt19937_64& rng) {
  std::vector<std::size_t> positions(word.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  std::shuffle(positions.begin(), positions.end(), rng);
  std::uniform_int_distribution<int> nonzero(1, 255);
  for (std::size_t i = 0; i < count; ++i) word[positions[i]] ^= static_cast<std::uint8_t>(nonzero(rng));
}

TEST(RsEncodeTest, GeneratorMatchesOracle) {
  for (std::size_t ec : {7u, 10u, 30u}) {
    const auto g = generator(ec);
    const auto expected = oracle_generator(ec);
    EXPECT_TRUE(std::equal(g.coeffs().begin(), g.coeffs().end(), expected.begin(), expected.end()))
        << "ec_len " << ec;
  }
}

TEST(RsEncodeTest, PublishedVersion1MExample) {
  // Data codewords of "HELLO WORLD" at version 1-M and their published
  // error correction codewords.
  const std::vector<std::uint8_t> data{32, 91, 11, 120, 209, 114, 220, 77,
                                       67, 64, 236, 17, 236, 17, 236, 17};
  const std::vector<std::uint8_t> expected{196, 35, 39, 119, 235, 215, 231, 226, 93, 23};
  EXPECT_EQ(encode(data, 10), expected);
}

TEST(RsEncodeTest, MatchesLongDivisionOracle) {
  const std::string text = "qrypt0 RS check";
  const std::vector<std::uint8_t> data(text.begin(), text.end());
  // Frozen from an independent Python long division.
  const std::vector<std::uint8_t> frozen{0x11, 0xbf, 0x5b, 0xe9, 0xf3, 0x98, 0xeb, 0x2c, 0x6b, 0xf2};
  EXPECT_EQ(oracle_parity(data, 10), frozen);
  EXPECT_EQ(encode(data, 10), frozen);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ec = 1 + rng() % 40;
    const auto d = random_bytes(rng, 1 + rng() % 120);
    ASSERT_EQ(encode(d, ec), oracle_parity(d, ec)) << "trial " << trial;
  }
}

TEST(RsEncodeTest, ZeroDataGivesZeroParity) {
  EXPECT_EQ(encode(std::vector<std::uint8_t>(20, 0), 10), std::vector<std::uint8_t>(10, 0));
}

TEST(RsEncodeTest, CodewordSyndromesVanish) {
  std::mt19937_64 rng(5);
  for (std::size_t ec = 7; ec <= 30; ec += 3) {
    const auto word = codeword_of(random_bytes(rng, 100), ec);
    const auto s = syndromes(word, ec);
    EXPECT_TRUE(std::all_of(s.begin(), s.end(), [](std::uint8_t v) { return v == 0; }));
  }
}

TEST(RsEncodeTest, RejectsDegenerateArguments) {
  EXPECT_THROW(encode(std::vector<std::uint8_t>{}, 4), Error);
  EXPECT_THROW(encode(std::vector<std::uint8_t>{1}, 0), Error);
}

TEST(RsDecodeTest, CleanCodewordUnchanged) {
  std::mt19937_64 rng(1);
  const auto data = random_bytes(rng, 50);
  const auto result = decode(codeword_of(data, 10), 10);
  EXPECT_EQ(result.data, data);
  EXPECT_EQ(result.corrected, 0u);
}

TEST(RsDecodeTest, CorrectsUpToHalfTheParity) {
  std::mt19937_64 rng(2024);
  for (std::size_t ec = 7; ec <= 30; ec += 3) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto data = random_bytes(rng, 1 + rng() % (150 - ec));
      auto word = codeword_of(data, ec);
      const std::size_t errors = rng() % (ec / 2 + 1);
      corrupt(word, errors, rng);
      const auto result = decode(word, ec);
      ASSERT_EQ(result.data, data) << "ec " << ec << " trial " << trial;
      ASSERT_EQ(result.corrected, errors);
    }
  }
}

TEST(RsDecodeTest, ErrorsInParityAreCorrectedToo) {
  std::mt19937_64 rng(9);
  const auto data = random_bytes(rng, 40);
  auto word = codeword_of(data, 10);
  for (std::size_t i = word.size() - 5; i < word.size(); ++i) word[i] ^= 0xA5;
  EXPECT_EQ(decode(word, 10).data, data);
}

TEST(RsDecodeTest, BeyondCapacityIsFlaggedOrMiscorrectedButNeverCrashes) {
  std::mt19937_64 rng(77);
  int flagged = 0;
  int miscorrected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t ec = trial % 2 == 0 ? 10 : 30;
    const auto data = random_bytes(rng, 60);
    auto word = codeword_of(data, ec);
    corrupt(word, ec / 2 + 1, rng);
    try {
      const auto result = decode(word, ec);
      EXPECT_NE(result.data, data);
      ++miscorrected;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::TooManyErrors);
      ++flagged;
    }
  }
  EXPECT_EQ(flagged + miscorrected, 2000);
  // Silent miscorrection needs the damage to land within distance t of
  // another codeword, which is rare at these lengths.
  EXPECT_GT(flagged, 1900);
}

TEST(RsDecodeTest, RejectsBadShapes) {
  EXPECT_EQ(error_code_of([] { decode(std::vector<std::uint8_t>(10, 0), 10); }),
            Errc::InvalidArgument);
  EXPECT_EQ(error_code_of([] { decode(std::vector<std::uint8_t>(256, 0), 10); }),
            Errc::InvalidArgument);
}

TEST(RsDecodeTest, MaximumLengthCodeword) {
  std::mt19937_64 rng(31);
  const auto data = random_bytes(rng, 255 - 30);
  auto word = codeword_of(data, 30);
  corrupt(word, 15, rng);
  EXPECT_EQ(decode(word, 30).data, data);
}

}  // namespace
}  // namespace qrypt0::rs
