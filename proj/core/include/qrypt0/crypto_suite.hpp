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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "qrypt0/envelope.hpp"

namespace qrypt0 {

// Frame wire constants, version 0x01 / suite 0x01:
//   magic "Q0" || version || suite || nonce (16) || AES-256-CTR(envelope) || HMAC-SHA-256 tag (32)
inline constexpr std::array<std::uint8_t, 2> kFrameMagic{0x51, 0x30};
inline constexpr std::uint8_t kFrameVersion = 0x01;
inline constexpr std::uint8_t kFrameSuite = 0x01;
inline constexpr std::size_t kFrameHeaderSize = 4;
inline constexpr std::size_t kNonceSize = 16;
inline constexpr std::size_t kTagSize = 32;
inline constexpr unsigned kKdfIterations = 600000;
inline constexpr std::string_view kKdfSaltPrefix = "qrypt0/v1/";

constexpr std::size_t frame_size(Profile p) noexcept {
  return kFrameHeaderSize + kNonceSize + envelope_size(p) + kTagSize;
}

static_assert(frame_size(Profile::Full) == 2932);
static_assert(frame_size(Profile::Compact) == 1452);

using Nonce = std::array<std::uint8_t, kNonceSize>;
using NonceSource = std::function<Nonce()>;

/// Encryption and MAC keys for one channel. Wiped on destruction.
class ChannelKeys {
 public:
  using Key = std::array<std::uint8_t, 32>;

  ChannelKeys(const Key& enc, const Key& mac) noexcept : enc_(enc), mac_(mac) {}
  ChannelKeys(const ChannelKeys&) = default;
  ChannelKeys& operator=(const ChannelKeys&) = default;
  ~ChannelKeys();

  const Key& enc() const noexcept { return enc_; }
  const Key& mac() const noexcept { return mac_; }

 private:
  Key enc_;
  Key mac_;
};

/// master = PBKDF2-HMAC-SHA-256(passphrase, "qrypt0/v1/" || channel_id, 600000, 32)
/// enc    = HMAC-SHA-256(master, 0x01 || "enc")
/// mac    = HMAC-SHA-256(master, 0x02 || "mac")
ChannelKeys derive_keys(std::string_view passphrase, std::string_view channel_id);

/// Non-empty printable ASCII without '/'.
bool valid_channel_id(std::string_view channel_id) noexcept;

/// 16 bytes from the OS CSPRNG. Safe to call from any thread.
Nonce random_nonce();

Bytes seal(const Envelope& e, const ChannelKeys& keys, const NonceSource& nonces);
Bytes seal(const Envelope& e, const ChannelKeys& keys);

/// Records how far open() got; lets tests observe that nothing is
/// decrypted before the tag checks out.
struct OpenTrace {
  bool header_ok = false;
  bool mac_ok = false;
  bool decrypted = false;
};

/// Length, header, then tag (constant time) are checked before any
/// decryption happens.
Envelope open(ByteView frame, const ChannelKeys& keys, Profile profile,
              OpenTrace* trace = nullptr);

/// Header-only view of a frame, needs no key.
struct FrameHeaderCheck {
  bool magic_ok = false;
  bool version_ok = false;
  bool suite_ok = false;

  bool ok() const noexcept { return magic_ok && version_ok && suite_ok; }
};

FrameHeaderCheck inspect_frame_header(ByteView frame) noexcept;

/// Throws BadMagic / UnsupportedVersion / UnsupportedSuite.
void require_frame_header(ByteView frame);

/// Profile whose frame length matches, if any.
std::optional<Profile> profile_for_frame_size(std::size_t n) noexcept;

}  // namespace qrypt0
