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

#include "qrypt0/envelope.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qrypt0/error.hpp"
#include "support/test_support.hpp"

namespace qrypt0 {
namespace {

using testing::error_code_of;

Envelope make(std::uint64_t number, std::uint64_t ts, std::string_view body,
              Profile profile = Profile::Full) {
  return Envelope{number, ts, Bytes(body.begin(), body.end()), profile};
}

TEST(EnvelopeTest, ProfileConstants) {
  EXPECT_EQ(envelope_size(Profile::Full), 2880u);
  EXPECT_EQ(envelope_size(Profile::Compact), 1400u);
  EXPECT_EQ(max_body(Profile::Full), 2862u);
  EXPECT_EQ(max_body(Profile::Compact), 1382u);
}

TEST(EnvelopeTest, EmptyBodyLayout) {
  const Bytes raw = serialize_envelope(make(1, 0, ""));
  ASSERT_EQ(raw.size(), 2880u);
  const Bytes head{0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_TRUE(std::equal(head.begin(), head.end(), raw.begin()));
  EXPECT_TRUE(std::all_of(raw.begin() + 18, raw.end(), [](std::uint8_t b) { return b == 0; }));
}

TEST(EnvelopeTest, ShortBodyLayout) {
  const Bytes raw = serialize_envelope(make(1, 0, "hi"));
  EXPECT_EQ(raw[16], 0x00);
  EXPECT_EQ(raw[17], 0x02);
  EXPECT_EQ(raw[18], 0x68);
  EXPECT_EQ(raw[19], 0x69);
  EXPECT_TRUE(std::all_of(raw.begin() + 20, raw.end(), [](std::uint8_t b) { return b == 0; }));
}

TEST(EnvelopeTest, HeaderFieldsAreBigEndian) {
  const Bytes raw = serialize_envelope(make(0x0102030405060708ull, 0x1112131415161718ull, ""));
  const Bytes expected{1, 2, 3, 4, 5, 6, 7, 8, 0x11, 0x12, 0x13, 0x14, 0x15, 0x16, 0x17, 0x18};
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), raw.begin()));
}

TEST(EnvelopeTest, BodyLengthBoundary) {
  Envelope e = make(1, 0, "");
  e.body.assign(2862, 'x');
  EXPECT_EQ(serialize_envelope(e).size(), 2880u);
  e.body.push_back('x');
  EXPECT_EQ(error_code_of([&] { serialize_envelope(e); }), Errc::BodyTooLong);

  Envelope c = make(1, 0, "", Profile::Compact);
  c.body.assign(1382, 'y');
  EXPECT_EQ(serialize_envelope(c).size(), 1400u);
  c.body.push_back('y');
  EXPECT_EQ(error_code_of([&] { serialize_envelope(c); }), Errc::BodyTooLong);
}

TEST(EnvelopeTest, ParseRejectsWrongLength) {
  Bytes raw = serialize_envelope(make(1, 0, "abc"));
  raw.pop_back();
  EXPECT_EQ(error_code_of([&] { parse_envelope(raw, Profile::Full); }), Errc::BadLength);
  EXPECT_EQ(error_code_of([&] { parse_envelope(Bytes(1400), Profile::Full); }), Errc::BadLength);
}

TEST(EnvelopeTest, ParseRejectsOversizedBodyLength) {
  Bytes raw = serialize_envelope(make(1, 0, ""));
  raw[16] = 0xFF;
  raw[17] = 0xFF;
  EXPECT_EQ(error_code_of([&] { parse_envelope(raw, Profile::Full); }), Errc::BadBodyLen);

  // One past the limit is also rejected.
  raw[16] = 0x0B;
  raw[17] = 0x2F;  // 2863
  EXPECT_EQ(error_code_of([&] { parse_envelope(raw, Profile::Full); }), Errc::BadBodyLen);
}

TEST(EnvelopeTest, ParseRejectsNonzeroPadding) {
  const Bytes clean = serialize_envelope(make(7, 99, "body"));
  for (std::size_t pos : {std::size_t{22}, std::size_t{1000}, std::size_t{2879}}) {
    Bytes raw = clean;
    raw[pos] = 0x01;
    EXPECT_EQ(error_code_of([&] { parse_envelope(raw, Profile::Full); }), Errc::BadPadding)
        << "pad byte " << pos;
  }
}

TEST(EnvelopeTest, RoundTripAcrossLengths) {
  std::mt19937_64 rng(42);
  for (Profile profile : {Profile::Full, Profile::Compact}) {
    for (std::size_t len = 0; len <= max_body(profile); len += 97) {
      Envelope e{rng(), rng(), testing::random_bytes(rng, len), profile};
      const Bytes raw = serialize_envelope(e);
      ASSERT_EQ(raw.size(), envelope_size(profile));
      EXPECT_EQ(parse_envelope(raw, profile), e);
    }
    Envelope full{1, 2, testing::random_bytes(rng, max_body(profile)), profile};
    EXPECT_EQ(parse_envelope(serialize_envelope(full), profile), full);
  }
}

TEST(EnvelopeTest, TrailingContentDoesNotChangeSize) {
  const Bytes a = serialize_envelope(make(3, 4, "same prefix"));
  const Bytes b = serialize_envelope(make(3, 4, "same prefix plus a much longer tail"));
  EXPECT_EQ(a.size(), b.size());
}

TEST(EnvelopeTest, BodyMayContainZeroBytes) {
  Envelope e = make(1, 1, "");
  e.body = {0, 0, 0, 'a', 0};
  EXPECT_EQ(parse_envelope(serialize_envelope(e), Profile::Full), e);
}

TEST(EnvelopeTest, ProfileNames) {
  EXPECT_EQ(parse_profile("full"), Profile::Full);
  EXPECT_EQ(parse_profile("COMPACT"), Profile::Compact);
  EXPECT_FALSE(parse_profile("huge").has_value());
  EXPECT_EQ(profile_name(Profile::Compact), "COMPACT");
}

}  // namespace
}  // namespace qrypt0
