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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qrypt0/module_image.hpp"

namespace qrypt0::qr {

enum class EcLevel { L, M, Q, H };

inline constexpr int kMinVersion = 1;
inline constexpr int kMaxVersion = 40;

std::string_view ec_level_name(EcLevel level) noexcept;
std::optional<EcLevel> parse_ec_level(std::string_view name) noexcept;

constexpr int side_for_version(int version) noexcept { return 17 + 4 * version; }

/// Codeword block structure of one (version, EC level).
struct BlockLayout {
  int num_blocks = 0;
  int ec_per_block = 0;
  int short_blocks = 0;      // blocks carrying short_data_len data codewords
  int short_data_len = 0;    // long blocks carry one more
  int total_codewords = 0;   // data + EC over all blocks

  int data_codewords() const noexcept { return total_codewords - num_blocks * ec_per_block; }
  int data_len(int block) const noexcept {
    return short_data_len + (block >= short_blocks ? 1 : 0);
  }
};

BlockLayout block_layout(int version, EcLevel level);

/// Number of modules available for codewords (including remainder bits).
int raw_data_modules(int version);

std::span<const int> alignment_positions(int version);

/// Largest byte-mode payload that fits (version, level).
std::size_t byte_capacity(int version, EcLevel level);

/// 2 bits as they appear in format information (L=01, M=00, Q=11, H=10).
int ec_format_bits(EcLevel level) noexcept;

/// 15-bit BCH(15,5) word including the 0x5412 XOR mask.
std::uint16_t format_word(EcLevel level, int mask);

/// 18-bit BCH(18,6) word, versions 7..40.
std::uint32_t version_word(int version);

/// Decoded contents of a format word.
struct FormatInfo {
  EcLevel level;
  int mask;
};
FormatInfo format_info_from_index(int index) noexcept;  // index = ec bits << 3 | mask

/// Where each module of a symbol goes: function patterns plus the zigzag
/// order of codeword bits.
class SymbolLayout {
 public:
  explicit SymbolLayout(int version);

  int version() const noexcept { return version_; }
  int side() const noexcept { return side_; }
  bool is_function(int x, int y) const { return function_.get(x, y); }

  /// Module coordinates in codeword bit order (MSB of codeword 0 first).
  /// Trailing remainder modules follow the last codeword bit.
  std::span<const std::pair<int, int>> data_order() const noexcept { return order_; }

  /// Dark/light value of every function module for the given format and
  /// version info; data modules are left light.
  ModuleGrid function_patterns(EcLevel level, int mask) const;

  /// Coordinates of the two format-information copies, bit i first.
  std::vector<std::pair<int, int>> format_positions_primary() const;
  std::vector<std::pair<int, int>> format_positions_secondary() const;
  /// Coordinates of the two version-information copies, bit i first.
  std::vector<std::pair<int, int>> version_positions_primary() const;
  std::vector<std::pair<int, int>> version_positions_secondary() const;

 private:
  int version_;
  int side_;
  ModuleGrid function_;
  std::vector<std::pair<int, int>> order_;
};

bool mask_inverts(int mask, int x, int y);

}  // namespace qrypt0::qr
