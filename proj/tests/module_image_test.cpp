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

#include "qrypt0/module_image.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qrypt0/error.hpp"
#include "support/test_support.hpp"

namespace qrypt0 {
namespace {

using testing::error_code_of;

ModuleImage parse(const std::string& text) {
  std::istringstream in(text);
  return read_pbm(in);
}

TEST(PbmTest, ReadsPlainFormat) {
  const auto img = parse("P1\n5 5\n10000\n01000\n00100\n00010\n00001\n");
  ASSERT_EQ(img.width(), 5);
  ASSERT_EQ(img.height(), 5);
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 5; ++x) EXPECT_EQ(img.get(x, y), x == y);
}

TEST(PbmTest, AcceptsCommentsAndLooseWhitespace) {
  const auto img = parse("P1 # made by hand\n3\n# height next\n2\n1 0 1\n0 1 0");
  EXPECT_TRUE(img.get(0, 0));
  EXPECT_FALSE(img.get(1, 0));
  EXPECT_TRUE(img.get(1, 1));
}

TEST(PbmTest, RejectsMalformedInput) {
  EXPECT_EQ(error_code_of([] { parse("P4\n1 1\n1\n"); }), Errc::MalformedImageFile);
  EXPECT_EQ(error_code_of([] { parse("P1\n5 5\n10101\n01"); }), Errc::MalformedImageFile);
  EXPECT_EQ(error_code_of([] { parse("P1\n2 1\n12\n"); }), Errc::MalformedImageFile);
  EXPECT_EQ(error_code_of([] { parse("P1\n0 4\n"); }), Errc::MalformedImageFile);
  EXPECT_EQ(error_code_of([] { parse("P1\n-3 4\n"); }), Errc::MalformedImageFile);
  EXPECT_EQ(error_code_of([] { parse("P1\n1 1\n1 1\n"); }), Errc::MalformedImageFile);
  EXPECT_EQ(error_code_of([] { parse(""); }), Errc::MalformedImageFile);
}

TEST(PbmTest, WriterKeepsLinesShort) {
  ModuleImage wide(185, 2);
  std::ostringstream out;
  write_pbm(wide, out);
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line)) EXPECT_LE(line.size(), 70u);
}

TEST(PbmTest, RoundTripThroughFile) {
  testing::TempDir dir;
  std::mt19937_64 rng(3);
  for (auto [w, h] : {std::pair{1, 1}, std::pair{185, 185}, std::pair{71, 3}}) {
    ModuleImage img(w, h);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) img.set(x, y, rng() & 1);
    const auto path = dir / "img.pbm";
    write_pbm(img, path);
    EXPECT_EQ(read_pbm(path), img);
  }
}

TEST(PbmTest, IoErrors) {
  testing::TempDir dir;
  EXPECT_EQ(error_code_of([&] { read_pbm(dir / "missing.pbm"); }), Errc::IoFailure);
  EXPECT_EQ(error_code_of([&] { write_pbm(ModuleImage(1, 1), dir / "no" / "such" / "dir.pbm"); }),
            Errc::IoFailure);
}

TEST(ModuleGridTest, BoundsAndFlip) {
  ModuleGrid g(3, 2);
  EXPECT_TRUE(g.in_bounds(2, 1));
  EXPECT_FALSE(g.in_bounds(3, 0));
  EXPECT_FALSE(g.in_bounds(0, -1));
  g.flip(1, 1);
  EXPECT_TRUE(g.get(1, 1));
  EXPECT_THROW(g.get(5, 5), std::out_of_range);
}

}  // namespace
}  // namespace qrypt0
