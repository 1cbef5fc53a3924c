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

#include "qrypt0/crypto_suite.hpp"

#include <algorithm>
#include <string>

#include "qrypt0/error.hpp"
#include "qrypt0/primitives.hpp"

namespace qrypt0 {
namespace {

ChannelKeys::Key subkey(const Bytes& master, std::uint8_t counter, std::string_view label) {
  Bytes msg{counter};
  msg.insert(msg.end(), label.begin(), label.end());
  const auto digest = primitives::hmac_sha256(master, msg);
  ChannelKeys::Key key;
  std::copy(digest.begin(), digest.end(), key.begin());
  return key;
}

}  // namespace

ChannelKeys::~ChannelKeys() {
  primitives::secure_zero(enc_);
  primitives::secure_zero(mac_);
}

bool valid_channel_id(std::string_view channel_id) noexcept {
  if (channel_id.empty()) return false;
  return std::all_of(channel_id.begin(), channel_id.end(), [](char c) {
    return c > 0x20 && c < 0x7F && c != '/';
  });
}

ChannelKeys derive_keys(std::string_view passphrase, std::string_view channel_id) {
  if (passphrase.empty()) fail(Errc::EmptyPassphrase, "passphrase must not be empty");
  if (!valid_channel_id(channel_id))
    fail(Errc::BadChannelId, "channel id must be non-empty printable ASCII without '/'");

  Bytes salt(kKdfSaltPrefix.begin(), kKdfSaltPrefix.end());
  salt.insert(salt.end(), channel_id.begin(), channel_id.end());

  Bytes master = primitives::pbkdf2_hmac_sha256(passphrase, salt, kKdfIterations, 32);
  ChannelKeys keys(subkey(master, 0x01, "enc"), subkey(master, 0x02, "mac"));
  primitives::secure_zero(master);
  return keys;
}

Nonce random_nonce() {
  Nonce n;
  primitives::fill_random(n);
  return n;
}

Bytes seal(const Envelope& e, const ChannelKeys& keys, const NonceSource& nonces) {
  Bytes plain = serialize_envelope(e);
  const Nonce nonce = nonces();

  Bytes frame;
  frame.reserve(frame_size(e.profile));
  frame.insert(frame.end(), kFrameMagic.begin(), kFrameMagic.end());
  frame.push_back(kFrameVersion);
  frame.push_back(kFrameSuite);
  frame.insert(frame.end(), nonce.begin(), nonce.end());

  const Bytes ct = primitives::aes256_ctr(keys.enc(), nonce, plain);
  primitives::secure_zero(plain);
  frame.insert(frame.end(), ct.begin(), ct.end());

  const auto tag = primitives::hmac_sha256(keys.mac(), frame);
  frame.insert(frame.end(), tag.begin(), tag.end());
  return frame;
}

Bytes seal(const Envelope& e, const ChannelKeys& keys) {
  return seal(e, keys, random_nonce);
}

FrameHeaderCheck inspect_frame_header(ByteView frame) noexcept {
  FrameHeaderCheck check;
  if (frame.size() < kFrameHeaderSize) return check;
  check.magic_ok = frame[0] == kFrameMagic[0] && frame[1] == kFrameMagic[1];
  check.version_ok = frame[2] == kFrameVersion;
  check.suite_ok = frame[3] == kFrameSuite;
  return check;
}

void require_frame_header(ByteView frame) {
  const auto check = inspect_frame_header(frame);
  if (!check.magic_ok) fail(Errc::BadMagic, "not a qrypt0 frame");
  if (!check.version_ok)
    fail(Errc::UnsupportedVersion, "frame version " + std::to_string(frame[2]));
  if (!check.suite_ok) fail(Errc::UnsupportedSuite, "frame suite " + std::to_string(frame[3]));
}

std::optional<Profile> profile_for_frame_size(std::size_t n) noexcept {
  if (n == frame_size(Profile::Full)) return Profile::Full;
  if (n == frame_size(Profile::Compact)) return Profile::Compact;
  return std::nullopt;
}

Envelope open(ByteView frame, const ChannelKeys& keys, Profile profile, OpenTrace* trace) {
  if (frame.size() != frame_size(profile))
    fail(Errc::BadLength, "frame must be " + std::to_string(frame_size(profile)) +
                              " bytes, got " + std::to_string(frame.size()));
  require_frame_header(frame);
  if (trace) trace->header_ok = true;

  const auto authenticated = frame.first(frame.size() - kTagSize);
  const auto tag = frame.last(kTagSize);
  const auto expected = primitives::hmac_sha256(keys.mac(), authenticated);
  if (!primitives::constant_time_equal(expected, tag))
    fail(Errc::AuthFailure, "message authentication failed");
  if (trace) trace->mac_ok = true;

  const auto nonce = frame.subspan<kFrameHeaderSize, kNonceSize>();
  const auto ct = authenticated.subspan(kFrameHeaderSize + kNonceSize);
  Bytes plain = primitives::aes256_ctr(keys.enc(), nonce, ct);
  if (trace) trace->decrypted = true;

  try {
    Envelope e = parse_envelope(plain, profile);
    primitives::secure_zero(plain);
    return e;
  } catch (...) {
    primitives::secure_zero(plain);
    throw;
  }
}

}  // namespace qrypt0
