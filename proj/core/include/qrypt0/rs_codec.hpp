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
#include <span>
#include <vector>

#include "qrypt0/gf256.hpp"

namespace qrypt0::rs {

/// prod_{i=0}^{ec_len-1} (x - 2^i), the QR convention (first root exponent 0).
gf256::Poly generator(std::size_t ec_len);

/// Parity bytes: remainder of data(x) * x^ec_len divided by generator(ec_len).
std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data, std::size_t ec_len);

/// S_j = c(2^j) for j in [0, ec_len).
std::vector<std::uint8_t> syndromes(std::span<const std::uint8_t> codeword, std::size_t ec_len);

struct DecodeResult {
  std::vector<std::uint8_t> data;  // codeword minus its parity tail
  std::size_t corrected = 0;       // byte positions repaired
};

/// Corrects up to ec_len / 2 byte errors (Berlekamp-Massey, Chien search,
/// Forney). Throws Error(TooManyErrors) when the damage is detectably
/// beyond that; heavier damage can still miscorrect silently.
DecodeResult decode(std::span<const std::uint8_t> codeword, std::size_t ec_len);

}  // namespace qrypt0::rs
