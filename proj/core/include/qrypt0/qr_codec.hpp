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
#include <vector>

#include "qrypt0/module_image.hpp"
#include "qrypt0/qr_tables.hpp"

namespace qrypt0::qr {

inline constexpr int kQuietZone = 4;

struct QrSymbol {
  int version = 0;
  EcLevel ec_level = EcLevel::L;
  int mask = 0;
  ModuleGrid modules;  // side x side, no quiet zone

  int side() const noexcept { return modules.width(); }
};

struct EncodeOptions {
  EcLevel ec_level = EcLevel::L;
  std::optional<int> version;  // smallest fitting version when unset
  std::optional<int> mask;     // lowest-penalty mask when unset
};

/// Single byte-mode segment. Throws PayloadTooLarge when the payload does
/// not fit version 40 (or the forced version) at the requested level.
QrSymbol encode(std::span<const std::uint8_t> payload, const EncodeOptions& options = {});

/// Smallest version whose byte capacity at `level` holds `payload_len`.
std::optional<int> min_version(std::size_t payload_len, EcLevel level);

/// Standard mask penalty (N1=3, N2=3, N3=40, N4=10) of a finished matrix.
int penalty_score(const ModuleGrid& modules);

/// Adds the quiet zone and replicates each module scale x scale.
ModuleImage render(const QrSymbol& symbol, int scale = 1);

struct DecodeReport {
  std::vector<std::uint8_t> payload;
  int version = 0;
  EcLevel ec_level = EcLevel::L;
  int mask = 0;
  int scale = 0;
  std::size_t corrected_codewords = 0;
};

/// Reads one axis-aligned, unrotated symbol at any integer scale.
DecodeReport decode_report(const ModuleImage& image);
std::vector<std::uint8_t> decode(const ModuleImage& image);

/// Module matrix recovered from an image, before any interpretation.
struct SampledSymbol {
  ModuleGrid modules;
  int scale = 0;
};
SampledSymbol sample(const ModuleImage& image);

}  // namespace qrypt0::qr
