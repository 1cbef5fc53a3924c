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

#include <algorithm>
#include <bit>
#include <climits>
#include <string>

#include "qrypt0/error.hpp"
#include "qrypt0/qr_codec.hpp"
#include "qrypt0/rs_codec.hpp"

namespace qrypt0::qr {
namespace {

// Finder modules allowed to disagree before the symbol is rejected.
constexpr int kFinderTolerance = 3;
// BCH(15,5) and BCH(18,6) both have minimum distance >= 7.
constexpr int kInfoBitTolerance = 3;

struct Bounds {
  int left = INT_MAX, top = INT_MAX, right = -1, bottom = -1;
  bool empty() const noexcept { return right < 0; }
};

Bounds dark_bounds(const ModuleImage& img) {
  Bounds b;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.get(x, y)) {
        b.left = std::min(b.left, x);
        b.right = std::max(b.right, x);
        b.top = std::min(b.top, y);
        b.bottom = std::max(b.bottom, y);
      }
  return b;
}

int finder_mismatches(const ModuleGrid& m, int left, int top) {
  int bad = 0;
  for (int dy = 0; dy < 7; ++dy)
    for (int dx = 0; dx < 7; ++dx) {
      const int dist = std::max(std::abs(dx - 3), std::abs(dy - 3));
      if (m.get(left + dx, top + dy) != (dist != 2)) ++bad;
    }
  return bad;
}

std::uint32_t read_bits(const ModuleGrid& m, const std::vector<std::pair<int, int>>& positions) {
  std::uint32_t word = 0;
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (m.get(positions[i].first, positions[i].second)) word |= 1u << i;
  return word;
}

struct Match {
  int index = -1;
  int distance = INT_MAX;
};

template <typename Candidates>
Match nearest(std::uint32_t word, const Candidates& candidates) {
  Match best;
  for (const auto& [index, codeword] : candidates) {
    const int d = std::popcount(word ^ codeword);
    if (d < best.distance) best = Match{index, d};
  }
  return best;
}

FormatInfo read_format(const ModuleGrid& m, const SymbolLayout& layout) {
  std::vector<std::pair<int, std::uint32_t>> candidates;
  for (int i = 0; i < 32; ++i) {
    const auto info = format_info_from_index(i);
    candidates.emplace_back(i, format_word(info.level, info.mask));
  }
  const Match a = nearest(read_bits(m, layout.format_positions_primary()), candidates);
  const Match b = nearest(read_bits(m, layout.format_positions_secondary()), candidates);
  const Match best = a.distance <= b.distance ? a : b;
  if (best.distance > kInfoBitTolerance)
    fail(Errc::FormatInfoUnreadable, "no format codeword within " +
                                         std::to_string(kInfoBitTolerance) + " bits");
  return format_info_from_index(best.index);
}

int read_version(const ModuleGrid& m, const SymbolLayout& layout) {
  std::vector<std::pair<int, std::uint32_t>> candidates;
  for (int v = 7; v <= kMaxVersion; ++v) candidates.emplace_back(v, version_word(v));
  const Match a = nearest(read_bits(m, layout.version_positions_primary()), candidates);
  const Match b = nearest(read_bits(m, layout.version_positions_secondary()), candidates);
  const Match best = a.distance <= b.distance ? a : b;
  if (best.distance > kInfoBitTolerance)
    fail(Errc::VersionInfoUnreadable, "no version codeword within " +
                                          std::to_string(kInfoBitTolerance) + " bits");
  return best.index;
}

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t remaining() const noexcept { return bytes_.size() * 8 - pos_; }

  unsigned take(int bits) {
    if (static_cast<std::size_t>(bits) > remaining())
      fail(Errc::StructureMismatch, "segment runs past the data codewords");
    unsigned value = 0;
    for (int i = 0; i < bits; ++i, ++pos_)
      value = (value << 1) | ((bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u);
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

SampledSymbol sample(const ModuleImage& image) {
  const Bounds b = dark_bounds(image);
  if (b.empty()) fail(Errc::NoSymbolFound, "image has no dark modules");

  // The top-left finder's first row is seven dark modules wide.
  int run = 0;
  while (b.left + run <= b.right && image.get(b.left + run, b.top)) ++run;
  if (run < 7 || run % 7 != 0) fail(Errc::NoSymbolFound, "no finder pattern at top-left");
  const int scale = run / 7;

  const int width = b.right - b.left + 1;
  const int height = b.bottom - b.top + 1;
  if (width != height || width % scale != 0)
    fail(Errc::NoSymbolFound, "dark region is not a square module grid");
  const int side = width / scale;
  if (side < side_for_version(kMinVersion) || side > side_for_version(kMaxVersion) ||
      (side - 17) % 4 != 0)
    fail(Errc::NoSymbolFound, "symbol side " + std::to_string(side) + " is not a QR size");

  SampledSymbol out{ModuleGrid(side, side), scale};
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x)
      out.modules.set(x, y, image.get(b.left + x * scale + scale / 2, b.top + y * scale + scale / 2));

  if (finder_mismatches(out.modules, 0, 0) > kFinderTolerance ||
      finder_mismatches(out.modules, side - 7, 0) > kFinderTolerance ||
      finder_mismatches(out.modules, 0, side - 7) > kFinderTolerance)
    fail(Errc::NoSymbolFound, "finder patterns not found at three corners");
  return out;
}

DecodeReport decode_report(const ModuleImage& image) {
  const SampledSymbol sampled = sample(image);
  const ModuleGrid& m = sampled.modules;
  const int version = (m.width() - 17) / 4;
  const SymbolLayout layout(version);

  if (version >= 7) {
    const int declared = read_version(m, layout);
    if (declared != version)
      fail(Errc::StructureMismatch, "version info says " + std::to_string(declared) +
                                        " but the symbol is version " + std::to_string(version));
  }
  const FormatInfo format = read_format(m, layout);
  const BlockLayout blocks = block_layout(version, format.level);

  std::vector<std::uint8_t> codewords(static_cast<std::size_t>(blocks.total_codewords), 0);
  const auto order = layout.data_order();
  for (std::size_t i = 0; i < codewords.size() * 8; ++i) {
    const auto [x, y] = order[i];
    if (m.get(x, y) != mask_inverts(format.mask, x, y))
      codewords[i / 8] = static_cast<std::uint8_t>(codewords[i / 8] | (1u << (7 - i % 8)));
  }

  // Undo the interleaving: data codewords round-robin, then parity.
  std::vector<std::vector<std::uint8_t>> split(static_cast<std::size_t>(blocks.num_blocks));
  std::size_t next = 0;
  for (int i = 0; i <= blocks.short_data_len; ++i)
    for (int b = 0; b < blocks.num_blocks; ++b)
      if (i < blocks.data_len(b)) split[b].push_back(codewords[next++]);
  for (int i = 0; i < blocks.ec_per_block; ++i)
    for (int b = 0; b < blocks.num_blocks; ++b) split[b].push_back(codewords[next++]);

  DecodeReport report;
  report.version = version;
  report.ec_level = format.level;
  report.mask = format.mask;
  report.scale = sampled.scale;

  std::vector<std::uint8_t> data;
  data.reserve(static_cast<std::size_t>(blocks.data_codewords()));
  for (const auto& block : split) {
    auto fixed = rs::decode(block, static_cast<std::size_t>(blocks.ec_per_block));
    report.corrected_codewords += fixed.corrected;
    data.insert(data.end(), fixed.data.begin(), fixed.data.end());
  }

  BitReader bits(data);
  const unsigned mode = bits.take(4);
  if (mode != 0b0100)
    fail(Errc::StructureMismatch, "only a byte-mode segment is supported (mode " +
                                      std::to_string(mode) + ")");
  const std::size_t length = bits.take(version <= 9 ? 8 : 16);
  if (length * 8 > bits.remaining())
    fail(Errc::StructureMismatch, "declared length " + std::to_string(length) +
                                      " exceeds the symbol's data capacity");
  report.payload.reserve(length);
  for (std::size_t i = 0; i < length; ++i)
    report.payload.push_back(static_cast<std::uint8_t>(bits.take(8)));
  return report;
}

std::vector<std::uint8_t> decode(const ModuleImage& image) {
  return decode_report(image).payload;
}

}  // namespace qrypt0::qr
