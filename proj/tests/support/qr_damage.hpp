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

#pragma once

// Maps codewords of a symbol back to module coordinates so tests can
// damage exactly the parts they intend to.

#include <random>
#include <utility>
#include <vector>

#include "qrypt0/qr_codec.hpp"

namespace qrypt0::testing {

/// Stream index of every codeword (data then parity) belonging to `block`.
inline std::vector<int> block_codeword_indices(const qr::BlockLayout& b, int block) {
  std::vector<int> out;
  int index = 0;
  for (int i = 0; i <= b.short_data_len; ++i)
    for (int blk = 0; blk < b.num_blocks; ++blk) {
      if (i >= b.data_len(blk)) continue;
      if (blk == block) out.push_back(index);
      ++index;
    }
  for (int i = 0; i < b.ec_per_block; ++i)
    for (int blk = 0; blk < b.num_blocks; ++blk) {
      if (blk == block) out.push_back(index);
      ++index;
    }
  return out;
}

/// Module coordinates carrying the eight bits of codeword `index`.
inline std::vector<std::pair<int, int>> codeword_modules(const qr::SymbolLayout& layout, int index) {
  const auto order = layout.data_order();
  return {order.begin() + index * 8, order.begin() + index * 8 + 8};
}

/// All modules that carry codeword bits (remainder bits excluded).
inline std::vector<std::pair<int, int>> codeword_area(const qr::SymbolLayout& layout,
                                                      const qr::BlockLayout& b) {
  const auto order = layout.data_order();
  return {order.begin(), order.begin() + b.total_codewords * 8};
}

/// Flips `count` distinct modules drawn from `area` in a 1:1 image.
inline void flip_modules(ModuleImage& image, const std::vector<std::pair<int, int>>& area,
                         std::size_t count, std::mt19937_64& rng) {
  std::vector<std::size_t> picks(area.size());
  for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, picks.size() - 1);
    std::swap(picks[i], picks[d(rng)]);
    const auto [x, y] = area[picks[i]];
    image.flip(x + qr::kQuietZone, y + qr::kQuietZone);
  }
}

}  // namespace qrypt0::testing
