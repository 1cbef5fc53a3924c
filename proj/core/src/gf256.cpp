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

#include "qrypt0/gf256.hpp"

#include <algorithm>
#include <array>

#include "qrypt0/error.hpp"

namespace qrypt0::gf256 {
namespace {

struct Tables {
  std::array<std::uint8_t, 512> exp{};
  std::array<int, 256> log{};

  constexpr Tables() {
    unsigned x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[i] = static_cast<std::uint8_t>(x);
      log[x] = i;
      x <<= 1;
      if (x & 0x100) x ^= kReductionPoly;
    }
    // Doubled so mul can index log[a] + log[b] without a modulo.
    for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
    log[0] = -1;
  }
};

constexpr Tables kTables;

}  // namespace

std::uint8_t add(std::uint8_t a, std::uint8_t b) noexcept { return a ^ b; }

std::uint8_t mul(std::uint8_t a, std::uint8_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  return kTables.exp[kTables.log[a] + kTables.log[b]];
}

std::uint8_t div(std::uint8_t a, std::uint8_t b) {
  if (b == 0) fail(Errc::InvalidArgument, "division by zero in GF(256)");
  if (a == 0) return 0;
  return kTables.exp[kTables.log[a] + 255 - kTables.log[b]];
}

std::uint8_t inv(std::uint8_t a) { return div(1, a); }

std::uint8_t exp(int e) noexcept {
  e %= 255;
  if (e < 0) e += 255;
  return kTables.exp[e];
}

int log(std::uint8_t a) {
  if (a == 0) fail(Errc::InvalidArgument, "log of zero in GF(256)");
  return kTables.log[a];
}

Poly::Poly() : coeffs_{0} {}

Poly::Poly(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(std::size_t degree, std::uint8_t coeff) {
  std::vector<std::uint8_t> c(degree + 1, 0);
  c[0] = coeff;
  return Poly(std::move(c));
}

void Poly::normalize() {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](std::uint8_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.assign(1, 0);
    return;
  }
  coeffs_.erase(coeffs_.begin(), first);
}

std::uint8_t Poly::coeff(std::size_t power) const noexcept {
  if (power > degree()) return 0;
  return coeffs_[degree() - power];
}

std::uint8_t Poly::eval(std::uint8_t x) const noexcept {
  std::uint8_t acc = 0;
  for (std::uint8_t c : coeffs_) acc = mul(acc, x) ^ c;
  return acc;
}

Poly Poly::operator+(const Poly& rhs) const {
  const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
  std::vector<std::uint8_t> out(n, 0);
  for (std::size_t p = 0; p < n; ++p) out[n - 1 - p] = coeff(p) ^ rhs.coeff(p);
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
  std::vector<std::uint8_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] ^= mul(coeffs_[i], rhs.coeffs_[j]);
  return Poly(std::move(out));
}

Poly Poly::scale(std::uint8_t factor) const {
  std::vector<std::uint8_t> out(coeffs_);
  for (auto& c : out) c = mul(c, factor);
  return Poly(std::move(out));
}

Poly Poly::mod(const Poly& divisor) const {
  if (divisor.is_zero()) fail(Errc::InvalidArgument, "polynomial division by zero");
  if (degree() < divisor.degree() || is_zero()) return *this;

  std::vector<std::uint8_t> rem(coeffs_);
  const std::uint8_t lead_inv = inv(divisor.coeffs_[0]);
  const std::size_t steps = rem.size() - divisor.coeffs_.size() + 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::uint8_t factor = mul(rem[i], lead_inv);
    if (factor == 0) continue;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem[i + j] ^= mul(divisor.coeffs_[j], factor);
  }
  return Poly(std::vector<std::uint8_t>(rem.end() - static_cast<std::ptrdiff_t>(divisor.degree()),
                                        rem.end()));
}

Poly Poly::derivative() const {
  if (degree() == 0) return Poly();
  // In characteristic 2 only odd powers survive.
  std::vector<std::uint8_t> out(degree(), 0);
  for (std::size_t p = 1; p <= degree(); ++p)
    if (p % 2 == 1) out[degree() - p] = coeff(p);
  return Poly(std::move(out));
}

}  // namespace qrypt0::gf256
