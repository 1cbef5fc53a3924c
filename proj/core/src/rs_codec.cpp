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

#include "qrypt0/rs_codec.hpp"

#include <algorithm>
#include <string>

#include "qrypt0/error.hpp"

namespace qrypt0::rs {
namespace {

// Lowest-degree-first helpers for the decoder, where that order reads
// closer to the textbook recurrences.
using Ascending = std::vector<std::uint8_t>;

std::uint8_t eval_ascending(const Ascending& p, std::uint8_t x) {
  std::uint8_t acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = gf256::mul(acc, x) ^ *it;
  return acc;
}

void trim(Ascending& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Ascending berlekamp_massey(const std::vector<std::uint8_t>& synd) {
  Ascending locator{1};
  Ascending prev{1};
  std::size_t length = 0;
  std::size_t shift = 1;
  std::uint8_t prev_discrepancy = 1;

  for (std::size_t n = 0; n < synd.size(); ++n) {
    std::uint8_t d = synd[n];
    for (std::size_t i = 1; i <= length && i < locator.size(); ++i)
      d ^= gf256::mul(locator[i], synd[n - i]);

    if (d == 0) {
      ++shift;
      continue;
    }
    const std::uint8_t factor = gf256::div(d, prev_discrepancy);
    Ascending next = locator;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, 0);
    for (std::size_t i = 0; i < prev.size(); ++i)
      next[i + shift] ^= gf256::mul(factor, prev[i]);

    if (2 * length <= n) {
      prev = locator;
      length = n + 1 - length;
      prev_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
    locator = std::move(next);
  }
  trim(locator);
  if (locator.size() - 1 != length)
    fail(Errc::TooManyErrors, "error locator degree does not match its length");
  return locator;
}

}  // namespace

gf256::Poly generator(std::size_t ec_len) {
  gf256::Poly g(std::vector<std::uint8_t>{1});
  for (std::size_t i = 0; i < ec_len; ++i)
    g = g * gf256::Poly(std::vector<std::uint8_t>{1, gf256::exp(static_cast<int>(i))});
  return g;
}

std::vector<std::uint8_t> encode(std::span<const std::uint8_t> data, std::size_t ec_len) {
  if (ec_len == 0 || data.empty()) fail(Errc::InvalidArgument, "rs encode needs data and ec_len >= 1");
  const auto gen = generator(ec_len);
  const auto g = gen.coeffs();  // g[0] == 1

  // Shift-register division; rem holds the running remainder.
  std::vector<std::uint8_t> rem(ec_len, 0);
  for (std::uint8_t byte : data) {
    const std::uint8_t factor = byte ^ rem[0];
    std::rotate(rem.begin(), rem.begin() + 1, rem.end());
    rem.back() = 0;
    for (std::size_t j = 0; j < ec_len; ++j) rem[j] ^= gf256::mul(g[j + 1], factor);
  }
  return rem;
}

std::vector<std::uint8_t> syndromes(std::span<const std::uint8_t> codeword, std::size_t ec_len) {
  std::vector<std::uint8_t> out(ec_len, 0);
  for (std::size_t j = 0; j < ec_len; ++j) {
    const std::uint8_t x = gf256::exp(static_cast<int>(j));
    std::uint8_t acc = 0;
    for (std::uint8_t c : codeword) acc = gf256::mul(acc, x) ^ c;
    out[j] = acc;
  }
  return out;
}

DecodeResult decode(std::span<const std::uint8_t> codeword, std::size_t ec_len) {
  if (ec_len == 0 || codeword.size() <= ec_len || codeword.size() > 255)
    fail(Errc::InvalidArgument, "rs decode needs ec_len < codeword length <= 255");

  DecodeResult result;
  const std::size_t n = codeword.size();
  std::vector<std::uint8_t> word(codeword.begin(), codeword.end());

  const auto synd = syndromes(word, ec_len);
  if (std::all_of(synd.begin(), synd.end(), [](std::uint8_t s) { return s == 0; })) {
    result.data.assign(word.begin(), word.end() - static_cast<std::ptrdiff_t>(ec_len));
    return result;
  }

  const Ascending locator = berlekamp_massey(synd);
  const std::size_t num_errors = locator.size() - 1;
  if (num_errors > ec_len / 2)
    fail(Errc::TooManyErrors, std::to_string(num_errors) + " errors exceed capacity " +
                                  std::to_string(ec_len / 2));

  // Omega(x) = S(x) * Lambda(x) mod x^ec_len
  Ascending omega(ec_len, 0);
  for (std::size_t i = 0; i < ec_len; ++i)
    for (std::size_t j = 0; j < locator.size() && i + j < ec_len; ++j)
      omega[i + j] ^= gf256::mul(synd[i], locator[j]);

  Ascending locator_deriv(locator.size() > 1 ? locator.size() - 1 : 1, 0);
  for (std::size_t i = 1; i < locator.size(); i += 2) locator_deriv[i - 1] = locator[i];

  // Chien search: array index i carries x^(n-1-i).
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int power = static_cast<int>(n - 1 - i);
    const std::uint8_t x_inv = gf256::exp(-power);
    if (eval_ascending(locator, x_inv) != 0) continue;
    ++roots;
    const std::uint8_t denom = eval_ascending(locator_deriv, x_inv);
    if (denom == 0) fail(Errc::TooManyErrors, "degenerate error locator");
    // Forney with first consecutive root 2^0: e = X * Omega(X^-1) / Lambda'(X^-1)
    const std::uint8_t magnitude =
        gf256::mul(gf256::exp(power), gf256::div(eval_ascending(omega, x_inv), denom));
    word[i] ^= magnitude;
  }
  if (roots != num_errors)
    fail(Errc::TooManyErrors, "found " + std::to_string(roots) + " error positions for a degree-" +
                                  std::to_string(num_errors) + " locator");

  const auto check = syndromes(word, ec_len);
  if (std::any_of(check.begin(), check.end(), [](std::uint8_t s) { return s != 0; }))
    fail(Errc::TooManyErrors, "residual syndromes after correction");

  result.corrected = num_errors;
  result.data.assign(word.begin(), word.end() - static_cast<std::ptrdiff_t>(ec_len));
  return result;
}

}  // namespace qrypt0::rs
