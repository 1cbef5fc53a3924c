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
#include <climits>
#include <string>

#include "qrypt0/error.hpp"
#include "qrypt0/qr_codec.hpp"
#include "qrypt0/rs_codec.hpp"

namespace qrypt0::qr {
namespace {

constexpr int kPenaltyN1 = 3;
constexpr int kPenaltyN2 = 3;
constexpr int kPenaltyN3 = 40;
constexpr int kPenaltyN4 = 10;

class BitWriter {
 public:
  void put(unsigned value, int bits) {
    for (int i = bits - 1; i >= 0; --i) bits_.push_back(static_cast<std::uint8_t>((value >> i) & 1));
  }
  std::size_t size() const noexcept { return bits_.size(); }

  std::vector<std::uint8_t> to_bytes() const {
    std::vector<std::uint8_t> out(bits_.size() / 8, 0);
    for (std::size_t i = 0; i < out.size() * 8; ++i)
      out[i / 8] = static_cast<std::uint8_t>(out[i / 8] | (bits_[i] << (7 - i % 8)));
    return out;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

std::vector<std::uint8_t> data_codewords(std::span<const std::uint8_t> payload, int version,
                                         EcLevel level) {
  const auto layout = block_layout(version, level);
  const std::size_t capacity_bits = static_cast<std::size_t>(layout.data_codewords()) * 8;

  BitWriter bits;
  bits.put(0b0100, 4);
  bits.put(static_cast<unsigned>(payload.size()), version <= 9 ? 8 : 16);
  for (std::uint8_t b : payload) bits.put(b, 8);

  bits.put(0, static_cast<int>(std::min<std::size_t>(4, capacity_bits - bits.size())));
  bits.put(0, static_cast<int>((8 - bits.size() % 8) % 8));
  for (std::uint8_t pad = 0xEC; bits.size() < capacity_bits; pad ^= 0xEC ^ 0x11) bits.put(pad, 8);
  return bits.to_bytes();
}

std::vector<std::uint8_t> interleave_with_parity(const std::vector<std::uint8_t>& data,
                                                 const BlockLayout& layout) {
  std::vector<std::vector<std::uint8_t>> blocks;
  std::vector<std::vector<std::uint8_t>> parity;
  std::size_t offset = 0;
  for (int b = 0; b < layout.num_blocks; ++b) {
    const auto len = static_cast<std::size_t>(layout.data_len(b));
    blocks.emplace_back(data.begin() + static_cast<std::ptrdiff_t>(offset),
                        data.begin() + static_cast<std::ptrdiff_t>(offset + len));
    parity.push_back(rs::encode(blocks.back(), static_cast<std::size_t>(layout.ec_per_block)));
    offset += len;
  }

  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(layout.total_codewords));
  for (int i = 0; i <= layout.short_data_len; ++i)
    for (int b = 0; b < layout.num_blocks; ++b)
      if (i < layout.data_len(b)) out.push_back(blocks[b][i]);
  for (int i = 0; i < layout.ec_per_block; ++i)
    for (int b = 0; b < layout.num_blocks; ++b) out.push_back(parity[b][i]);
  return out;
}

ModuleGrid build_matrix(const SymbolLayout& layout, EcLevel level, int mask,
                        const std::vector<std::uint8_t>& codewords) {
  ModuleGrid grid = layout.function_patterns(level, mask);
  const auto order = layout.data_order();
  const std::size_t bit_count = codewords.size() * 8;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [x, y] = order[i];
    bool dark = false;
    if (i < bit_count) dark = (codewords[i / 8] >> (7 - i % 8)) & 1;
    grid.set(x, y, dark != mask_inverts(mask, x, y));
  }
  return grid;
}

}  // namespace

std::optional<int> min_version(std::size_t payload_len, EcLevel level) {
  for (int v = kMinVersion; v <= kMaxVersion; ++v)
    if (payload_len <= byte_capacity(v, level)) return v;
  return std::nullopt;
}

int penalty_score(const ModuleGrid& m) {
  const int side = m.width();
  int score = 0;

  auto run_penalty = [&](auto at) {
    for (int line = 0; line < side; ++line) {
      bool color = at(line, 0);
      int run = 1;
      for (int i = 1; i < side; ++i) {
        if (at(line, i) != color) {
          color = at(line, i);
          run = 1;
        } else if (++run == 5) {
          score += kPenaltyN1;
        } else if (run > 5) {
          ++score;
        }
      }
    }
  };
  run_penalty([&](int y, int x) { return m.get(x, y); });
  run_penalty([&](int x, int y) { return m.get(x, y); });

  for (int y = 0; y + 1 < side; ++y)
    for (int x = 0; x + 1 < side; ++x) {
      const bool c = m.get(x, y);
      if (c == m.get(x + 1, y) && c == m.get(x, y + 1) && c == m.get(x + 1, y + 1))
        score += kPenaltyN2;
    }

  // 1:1:3:1:1 finder look-alike with four light modules on one side.
  auto finder_like = [&](auto at) {
    for (int line = 0; line < side; ++line) {
      unsigned window = 0;
      for (int i = 0; i < side; ++i) {
        window = ((window << 1) & 0x7FF) | (at(line, i) ? 1u : 0u);
        if (i >= 10 && (window == 0x05D || window == 0x5D0)) score += kPenaltyN3;
      }
    }
  };
  finder_like([&](int y, int x) { return m.get(x, y); });
  finder_like([&](int x, int y) { return m.get(x, y); });

  long dark = 0;
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) dark += m.get(x, y) ? 1 : 0;
  const long total = static_cast<long>(side) * side;
  // Each 5% step of deviation from 50% dark costs N4.
  for (long k = 0; dark * 20 < (9 - k) * total || dark * 20 > (11 + k) * total; ++k)
    score += kPenaltyN4;
  return score;
}

QrSymbol encode(std::span<const std::uint8_t> payload, const EncodeOptions& options) {
  int version = 0;
  if (options.version) {
    version = *options.version;
    if (version < kMinVersion || version > kMaxVersion)
      fail(Errc::InvalidArgument, "forced version out of range");
    if (payload.size() > byte_capacity(version, options.ec_level))
      fail(Errc::PayloadTooLarge, std::to_string(payload.size()) + " bytes exceed version " +
                                      std::to_string(version) + " capacity of " +
                                      std::to_string(byte_capacity(version, options.ec_level)));
  } else {
    const auto v = min_version(payload.size(), options.ec_level);
    if (!v)
      fail(Errc::PayloadTooLarge,
           std::to_string(payload.size()) + " bytes exceed the largest capacity of " +
               std::to_string(byte_capacity(kMaxVersion, options.ec_level)) + " at level " +
               std::string(ec_level_name(options.ec_level)));
    version = *v;
  }
  if (options.mask && (*options.mask < 0 || *options.mask > 7))
    fail(Errc::InvalidArgument, "forced mask out of range");

  const auto blocks = block_layout(version, options.ec_level);
  const auto codewords =
      interleave_with_parity(data_codewords(payload, version, options.ec_level), blocks);
  const SymbolLayout layout(version);

  QrSymbol symbol;
  symbol.version = version;
  symbol.ec_level = options.ec_level;
  if (options.mask) {
    symbol.mask = *options.mask;
    symbol.modules = build_matrix(layout, options.ec_level, symbol.mask, codewords);
    return symbol;
  }

  int best_penalty = INT_MAX;
  for (int mask = 0; mask < 8; ++mask) {
    ModuleGrid candidate = build_matrix(layout, options.ec_level, mask, codewords);
    const int penalty = penalty_score(candidate);
    if (penalty < best_penalty) {
      best_penalty = penalty;
      symbol.mask = mask;
      symbol.modules = std::move(candidate);
    }
  }
  return symbol;
}

ModuleImage render(const QrSymbol& symbol, int scale) {
  if (scale < 1) fail(Errc::InvalidArgument, "render scale must be >= 1");
  const int cells = symbol.side() + 2 * kQuietZone;
  ModuleImage img(cells * scale, cells * scale);
  for (int y = 0; y < symbol.side(); ++y)
    for (int x = 0; x < symbol.side(); ++x) {
      if (!symbol.modules.get(x, y)) continue;
      for (int dy = 0; dy < scale; ++dy)
        for (int dx = 0; dx < scale; ++dx)
          img.set((x + kQuietZone) * scale + dx, (y + kQuietZone) * scale + dy, true);
    }
  return img;
}

}  // namespace qrypt0::qr
