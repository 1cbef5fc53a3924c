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

// Thin wrappers over the system crypto library. Only what the frame
// format needs is exposed.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qrypt0::primitives {

using Sha256Digest = std::array<std::uint8_t, 32>;

std::vector<std::uint8_t> pbkdf2_hmac_sha256(std::string_view passphrase,
                                             std::span<const std::uint8_t> salt,
                                             unsigned iterations, std::size_t out_len);

Sha256Digest hmac_sha256(std::span<const std::uint8_t> key,
                         std::span<const std::uint8_t> message);

/// AES-256-CTR where the 16-byte initial counter block increments as one
/// big-endian 128-bit integer. Encryption and decryption are the same call.
std::vector<std::uint8_t> aes256_ctr(std::span<const std::uint8_t, 32> key,
                                     std::span<const std::uint8_t, 16> counter_block,
                                     std::span<const std::uint8_t> input);

/// Throws Error(EntropyUnavailable) when the OS source fails.
void fill_random(std::span<std::uint8_t> out);

bool constant_time_equal(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b) noexcept;

void secure_zero(std::span<std::uint8_t> buf) noexcept;

}  // namespace qrypt0::primitives
