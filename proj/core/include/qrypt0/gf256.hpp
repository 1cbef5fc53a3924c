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

namespace qrypt0::gf256 {

/// GF(2^8) reduced by x^8 + x^4 + x^3 + x^2 + 1 (0x11D), generator 2.
inline constexpr unsigned kReductionPoly = 0x11D;

std::uint8_t add(std::uint8_t a, std::uint8_t b) noexcept;
std::uint8_t mul(std::uint8_t a, std::uint8_t b) noexcept;
/// b must be nonzero.
std::uint8_t div(std::uint8_t a, std::uint8_t b);
/// a must be nonzero.
std::uint8_t inv(std::uint8_t a);
/// 2^e, e taken modulo 255.
std::uint8_t exp(int e) noexcept;
/// a must be nonzero; result in 0..254.
int log(std::uint8_t a);

/// Polynomial with coefficients stored highest degree first. Normalized so
/// that only the zero polynomial has a leading zero (and it is stored as {0}).
class Poly {
 public:
  Poly();
  explicit Poly(std::vector<std::uint8_t> coeffs);

  static Poly monomial(std::size_t degree, std::uint8_t coeff);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^power (0 when beyond the degree).
  std::uint8_t coeff(std::size_t power) const noexcept;

  std::uint8_t eval(std::uint8_t x) const noexcept;

  Poly operator+(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly scale(std::uint8_t factor) const;
  /// Remainder of *this divided by divisor (divisor nonzero).
  Poly mod(const Poly& divisor) const;
  /// Formal derivative.
  Poly derivative() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<std::uint8_t> coeffs_;
};

}  // namespace qrypt0::gf256
