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

#include "qrypt0/qr_tables.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <string>

#include "qrypt0/error.hpp"

namespace qrypt0::qr {
namespace {

// Error correction codewords per block, indexed [level][version - 1].
constexpr std::array<std::array<std::int8_t, 40>, 4> kEcPerBlock{{
    {7, 10, 15, 20, 26, 18, 20, 24, 30, 18, 20, 24, 26, 30, 22, 24, 28, 30, 28, 28,
     28, 28, 30, 30, 26, 28, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30},
    {10, 16, 26, 18, 24, 16, 18, 22, 22, 26, 30, 22, 22, 24, 24, 28, 28, 26, 26, 26,
     26, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28},
    {13, 22, 18, 26, 18, 24, 18, 22, 20, 24, 28, 26, 24, 20, 30, 24, 28, 28, 26, 30,
     28, 30, 30, 30, 30, 28, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30},
    {17, 28, 22, 16, 22, 28, 26, 26, 24, 28, 24, 28, 22, 24, 24, 30, 28, 28, 26, 28,
     30, 24, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30},
}};

// Number of error correction blocks, indexed [level][version - 1].
constexpr std::array<std::array<std::int8_t, 40>, 4> kNumBlocks{{
    {1, 1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 6, 6, 7, 8,
     8, 9, 9, 10, 12, 12, 12, 13, 14, 15, 16, 17, 18, 19, 19, 20, 21, 22, 24, 25},
    {1, 1, 1, 2, 2, 4, 4, 4, 5, 5, 5, 8, 9, 9, 10, 10, 11, 13, 14, 16,
     17, 17, 18, 20, 21, 23, 25, 26, 28, 29, 31, 33, 35, 37, 38, 40, 43, 45, 47, 49},
    {1, 1, 2, 2, 4, 4, 6, 6, 8, 8, 8, 10, 12, 16, 12, 17, 16, 18, 21, 20,
     23, 23, 25, 27, 29, 34, 34, 35, 38, 40, 43, 45, 48, 51, 53, 56, 59, 62, 65, 68},
    {1, 1, 2, 4, 4, 4, 5, 6, 8, 8, 11, 11, 16, 16, 18, 16, 19, 21, 25, 25,
     25, 34, 30, 32, 35, 37, 40, 42, 45, 48, 51, 54, 57, 60, 63, 66, 70, 74, 77, 81},
}};

// Alignment pattern centre coordinates (both axes), indexed by version - 1.
const std::array<std::vector<int>, 40> kAlignment{{
    {},
    {6, 18},
    {6, 22},
    {6, 26},
    {6, 30},
    {6, 34},
    {6, 22, 38},
    {6, 24, 42},
    {6, 26, 46},
    {6, 28, 50},
    {6, 30, 54},
    {6, 32, 58},
    {6, 34, 62},
    {6, 26, 46, 66},
    {6, 26, 48, 70},
    {6, 26, 50, 74},
    {6, 30, 54, 78},
    {6, 30, 56, 82},
    {6, 30, 58, 86},
    {6, 34, 62, 90},
    {6, 28, 50, 72, 94},
    {6, 26, 50, 74, 98},
    {6, 30, 54, 78, 102},
    {6, 28, 54, 80, 106},
    {6, 32, 58, 84, 110},
    {6, 30, 58, 86, 114},
    {6, 34, 62, 90, 118},
    {6, 26, 50, 74, 98, 122},
    {6, 30, 54, 78, 102, 126},
    {6, 26, 52, 78, 104, 130},
    {6, 30, 56, 82, 108, 134},
    {6, 34, 60, 86, 112, 138},
    {6, 30, 58, 86, 114, 142},
    {6, 34, 62, 90, 118, 146},
    {6, 30, 54, 78, 102, 126, 150},
    {6, 24, 50, 76, 102, 128, 154},
    {6, 28, 54, 80, 106, 132, 158},
    {6, 32, 58, 84, 110, 136, 162},
    {6, 26, 54, 82, 110, 138, 166},
    {6, 30, 58, 86, 114, 142, 170},
}};

void check_version(int version) {
  if (version < kMinVersion || version > kMaxVersion)
    fail(Errc::InvalidArgument, "QR version " + std::to_string(version) + " out of range");
}

int level_index(EcLevel level) noexcept { return static_cast<int>(level); }

}  // namespace

std::string_view ec_level_name(EcLevel level) noexcept {
  switch (level) {
    case EcLevel::L: return "L";
    case EcLevel::M: return "M";
    case EcLevel::Q: return "Q";
    case EcLevel::H: return "H";
  }
  return "?";
}

std::optional<EcLevel> parse_ec_level(std::string_view name) noexcept {
  if (name.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'L': return EcLevel::L;
    case 'M': return EcLevel::M;
    case 'Q': return EcLevel::Q;
    case 'H': return EcLevel::H;
    default: return std::nullopt;
  }
}

int raw_data_modules(int version) {
  check_version(version);
  const int side = side_for_version(version);
  int modules = side * side;
  modules -= 3 * 64;            // finders with separators
  modules -= 2 * (side - 16);   // timing patterns between finders
  modules -= 31;                // format info (2 x 15) plus the dark module
  if (version >= 2) {
    const int n = static_cast<int>(kAlignment[version - 1].size());
    modules -= (n * n - 3) * 25;
    modules += 2 * (n - 2) * 5;  // alignment patterns that overlap timing
  }
  if (version >= 7) modules -= 2 * 18;
  return modules;
}

BlockLayout block_layout(int version, EcLevel level) {
  check_version(version);
  BlockLayout layout;
  layout.num_blocks = kNumBlocks[level_index(level)][version - 1];
  layout.ec_per_block = kEcPerBlock[level_index(level)][version - 1];
  layout.total_codewords = raw_data_modules(version) / 8;
  const int data = layout.data_codewords();
  layout.short_data_len = data / layout.num_blocks;
  layout.short_blocks = layout.num_blocks - data % layout.num_blocks;
  return layout;
}

std::span<const int> alignment_positions(int version) {
  check_version(version);
  return kAlignment[version - 1];
}

std::size_t byte_capacity(int version, EcLevel level) {
  const int data_bits = block_layout(version, level).data_codewords() * 8;
  const int header_bits = 4 + (version <= 9 ? 8 : 16);
  return static_cast<std::size_t>((data_bits - header_bits) / 8);
}

int ec_format_bits(EcLevel level) noexcept {
  switch (level) {
    case EcLevel::L: return 1;
    case EcLevel::M: return 0;
    case EcLevel::Q: return 3;
    case EcLevel::H: return 2;
  }
  return 0;
}

std::uint16_t format_word(EcLevel level, int mask) {
  if (mask < 0 || mask > 7) fail(Errc::InvalidArgument, "mask out of range");
  const unsigned data = static_cast<unsigned>(ec_format_bits(level) << 3 | mask);
  unsigned rem = data;
  for (int i = 0; i < 10; ++i) rem = (rem << 1) ^ ((rem >> 9) * 0x537);
  return static_cast<std::uint16_t>(((data << 10) | (rem & 0x3FF)) ^ 0x5412);
}

std::uint32_t version_word(int version) {
  if (version < 7 || version > kMaxVersion)
    fail(Errc::InvalidArgument, "version info exists only for versions 7..40");
  unsigned rem = static_cast<unsigned>(version);
  for (int i = 0; i < 12; ++i) rem = (rem << 1) ^ ((rem >> 11) * 0x1F25);
  return (static_cast<std::uint32_t>(version) << 12) | (rem & 0xFFF);
}

FormatInfo format_info_from_index(int index) noexcept {
  static constexpr std::array<EcLevel, 4> kByBits{EcLevel::M, EcLevel::L, EcLevel::H,
                                                  EcLevel::Q};
  return FormatInfo{kByBits[(index >> 3) & 3], index & 7};
}

bool mask_inverts(int mask, int x, int y) {
  // x = column, y = row
  switch (mask) {
    case 0: return (x + y) % 2 == 0;
    case 1: return y % 2 == 0;
    case 2: return x % 3 == 0;
    case 3: return (x + y) % 3 == 0;
    case 4: return (x / 3 + y / 2) % 2 == 0;
    case 5: return x * y % 2 + x * y % 3 == 0;
    case 6: return (x * y % 2 + x * y % 3) % 2 == 0;
    case 7: return ((x + y) % 2 + x * y % 3) % 2 == 0;
    default: fail(Errc::InvalidArgument, "mask out of range");
  }
}

SymbolLayout::SymbolLayout(int version)
    : version_(version), side_(side_for_version(version)), function_(side_, side_) {
  check_version(version);
  // Reserve every function module; actual values come from function_patterns().
  auto reserve = [&](int x, int y) {
    if (function_.in_bounds(x, y)) function_.set(x, y, true);
  };
  for (int i = 0; i < side_; ++i) {
    reserve(6, i);
    reserve(i, 6);
  }
  // Finders with separators, plus the format-information strips beside them.
  for (int dy = 0; dy < 9; ++dy)
    for (int dx = 0; dx < 9; ++dx) reserve(dx, dy);
  for (int dy = 0; dy < 9; ++dy)
    for (int dx = 0; dx < 8; ++dx) reserve(side_ - 1 - dx, dy);
  for (int dy = 0; dy < 8; ++dy)
    for (int dx = 0; dx < 9; ++dx) reserve(dx, side_ - 1 - dy);
  const auto align = alignment_positions(version);
  const std::size_t n = align.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((i == 0 && j == 0) || (i == 0 && j == n - 1) || (i == n - 1 && j == 0)) continue;
      for (int dy = -2; dy <= 2; ++dy)
        for (int dx = -2; dx <= 2; ++dx) reserve(align[i] + dx, align[j] + dy);
    }
  if (version >= 7)
    for (int i = 0; i < 18; ++i) {
      const int a = side_ - 11 + i % 3;
      const int b = i / 3;
      reserve(a, b);
      reserve(b, a);
    }

  // Zigzag: column pairs right to left, skipping the vertical timing column,
  // alternating upward and downward sweeps.
  order_.reserve(static_cast<std::size_t>(raw_data_modules(version)));
  bool upward = true;
  for (int right = side_ - 1; right >= 1; right -= 2) {
    if (right == 6) right = 5;
    for (int step = 0; step < side_; ++step) {
      const int y = upward ? side_ - 1 - step : step;
      for (int x : {right, right - 1})
        if (!function_.get(x, y)) order_.emplace_back(x, y);
    }
    upward = !upward;
  }
  if (order_.size() != static_cast<std::size_t>(raw_data_modules(version)))
    fail(Errc::StructureMismatch, "layout module count disagrees with capacity table");
}

ModuleGrid SymbolLayout::function_patterns(EcLevel level, int mask) const {
  ModuleGrid grid(side_, side_);
  for (int i = 0; i < side_; ++i) {
    grid.set(6, i, i % 2 == 0);
    grid.set(i, 6, i % 2 == 0);
  }
  auto finder = [&](int cx, int cy) {
    for (int dy = -4; dy <= 4; ++dy)
      for (int dx = -4; dx <= 4; ++dx) {
        const int x = cx + dx;
        const int y = cy + dy;
        if (!grid.in_bounds(x, y)) continue;
        const int dist = std::max(std::abs(dx), std::abs(dy));
        grid.set(x, y, dist != 2 && dist != 4);
      }
  };
  finder(3, 3);
  finder(side_ - 4, 3);
  finder(3, side_ - 4);

  const auto align = alignment_positions(version_);
  const std::size_t n = align.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((i == 0 && j == 0) || (i == 0 && j == n - 1) || (i == n - 1 && j == 0)) continue;
      for (int dy = -2; dy <= 2; ++dy)
        for (int dx = -2; dx <= 2; ++dx)
          grid.set(align[i] + dx, align[j] + dy, std::max(std::abs(dx), std::abs(dy)) != 1);
    }

  const std::uint16_t format = format_word(level, mask);
  const auto primary = format_positions_primary();
  const auto secondary = format_positions_secondary();
  for (int i = 0; i < 15; ++i) {
    const bool bit = (format >> i) & 1;
    grid.set(primary[i].first, primary[i].second, bit);
    grid.set(secondary[i].first, secondary[i].second, bit);
  }
  grid.set(8, side_ - 8, true);  // dark module

  if (version_ >= 7) {
    const std::uint32_t word = version_word(version_);
    const auto vp = version_positions_primary();
    const auto vs = version_positions_secondary();
    for (int i = 0; i < 18; ++i) {
      const bool bit = (word >> i) & 1;
      grid.set(vp[i].first, vp[i].second, bit);
      grid.set(vs[i].first, vs[i].second, bit);
    }
  }
  return grid;
}

std::vector<std::pair<int, int>> SymbolLayout::format_positions_primary() const {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i <= 5; ++i) pos.emplace_back(8, i);
  pos.emplace_back(8, 7);
  pos.emplace_back(8, 8);
  pos.emplace_back(7, 8);
  for (int i = 9; i < 15; ++i) pos.emplace_back(14 - i, 8);
  return pos;
}

std::vector<std::pair<int, int>> SymbolLayout::format_positions_secondary() const {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i <= 7; ++i) pos.emplace_back(side_ - 1 - i, 8);
  for (int i = 8; i < 15; ++i) pos.emplace_back(8, side_ - 15 + i);
  return pos;
}

std::vector<std::pair<int, int>> SymbolLayout::version_positions_primary() const {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < 18; ++i) pos.emplace_back(side_ - 11 + i % 3, i / 3);
  return pos;
}

std::vector<std::pair<int, int>> SymbolLayout::version_positions_secondary() const {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < 18; ++i) pos.emplace_back(i / 3, side_ - 11 + i % 3);
  return pos;
}

}  // namespace qrypt0::qr
