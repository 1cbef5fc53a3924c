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
#include <vector>

namespace qrypt0 {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Size class of a channel. FULL fills one version-40 symbol at EC level L;
/// COMPACT targets scanners that only manage about half of that.
enum class Profile { Full, Compact };

inline constexpr std::size_t kEnvelopeHeaderSize = 18;

constexpr std::size_t envelope_size(Profile p) noexcept {
  return p == Profile::Full ? 2880 : 1400;
}
constexpr std::size_t max_body(Profile p) noexcept {
  return envelope_size(p) - kEnvelopeHeaderSize;
}

std::string_view profile_name(Profile p) noexcept;
/// Accepts "FULL"/"COMPACT" in any letter case.
std::optional<Profile> parse_profile(std::string_view name) noexcept;

/// Plaintext record sealed into one frame.
struct Envelope {
  std::uint64_t msg_number = 0;
  std::uint64_t timestamp = 0;  // Unix seconds
  Bytes body;
  Profile profile = Profile::Full;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

/// msg_number (8, BE) || timestamp (8, BE) || body_len (2, BE) || body ||
/// zero padding to envelope_size(profile).
Bytes serialize_envelope(const Envelope& e);

/// Inverse of serialize_envelope. A nonzero padding byte is corruption.
Envelope parse_envelope(ByteView raw, Profile profile);

}  // namespace qrypt0
