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

#include "qrypt0/envelope.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qrypt0/error.hpp"

namespace qrypt0 {
namespace {

void put_be(Bytes& out, std::uint64_t value, int width) {
  for (int shift = (width - 1) * 8; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>(value >> shift));
}

std::uint64_t get_be(ByteView in, std::size_t offset, int width) {
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value = (value << 8) | in[offset + i];
  return value;
}

}  // namespace

std::string_view profile_name(Profile p) noexcept {
  return p == Profile::Full ? "FULL" : "COMPACT";
}

std::optional<Profile> parse_profile(std::string_view name) noexcept {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "FULL") return Profile::Full;
  if (upper == "COMPACT") return Profile::Compact;
  return std::nullopt;
}

Bytes serialize_envelope(const Envelope& e) {
  const std::size_t limit = max_body(e.profile);
  if (e.body.size() > limit)
    fail(Errc::BodyTooLong, "body is " + std::to_string(e.body.size()) +
                                " bytes; " + std::string(profile_name(e.profile)) +
                                " allows at most " + std::to_string(limit));

  Bytes out;
  out.reserve(envelope_size(e.profile));
  put_be(out, e.msg_number, 8);
  put_be(out, e.timestamp, 8);
  put_be(out, e.body.size(), 2);
  out.insert(out.end(), e.body.begin(), e.body.end());
  out.resize(envelope_size(e.profile), 0x00);
  return out;
}

Envelope parse_envelope(ByteView raw, Profile profile) {
  if (raw.size() != envelope_size(profile))
    fail(Errc::BadLength, "envelope must be " + std::to_string(envelope_size(profile)) +
                              " bytes, got " + std::to_string(raw.size()));

  const std::size_t body_len = get_be(raw, 16, 2);
  if (body_len > max_body(profile))
    fail(Errc::BadBodyLen, "declared body length " + std::to_string(body_len) +
                               " exceeds " + std::to_string(max_body(profile)));

  const auto pad = raw.subspan(kEnvelopeHeaderSize + body_len);
  if (std::any_of(pad.begin(), pad.end(), [](std::uint8_t b) { return b != 0; }))
    fail(Errc::BadPadding, "nonzero byte in envelope padding");

  Envelope e;
  e.msg_number = get_be(raw, 0, 8);
  e.timestamp = get_be(raw, 8, 8);
  e.body.assign(raw.begin() + kEnvelopeHeaderSize,
                raw.begin() + static_cast<std::ptrdiff_t>(kEnvelopeHeaderSize + body_len));
  e.profile = profile;
  return e;
}

}  // namespace qrypt0
