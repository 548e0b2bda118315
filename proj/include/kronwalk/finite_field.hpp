// Copyright 2026 The kronwalk Authors
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

#include <cstdint>
#include <optional>
#include <vector>

namespace kronwalk {

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;
};

/// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<PrimePower> prime_power_decomposition(std::uint64_t q);

/// GF(p^k), elements represented as polynomials over GF(p) reduced modulo a
/// monic irreducible polynomial of degree k.
///
/// Element indices are the base-p encoding of the coefficient vector,
/// index = c_0 + c_1 p + ... + c_{k-1} p^{k-1}, so index 0 is zero, index 1 is
/// one, and for k = 1 indices coincide with residues mod p. The modulus is the
/// first irreducible encountered when monic degree-k polynomials are
/// enumerated in that same encoding of their lower k coefficients.
class GaloisField {
 public:
  /// Throws DomainError unless q is a prime power.
  explicit GaloisField(std::uint64_t q);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t characteristic() const noexcept { return prime_; }
  std::uint32_t degree() const noexcept { return degree_; }

  /// Coefficients c_0..c_k of the monic modulus, low to high.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t negate(std::uint32_t x) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, negate(y)); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;

  std::vector<std::uint32_t> coefficients(std::uint32_t x) const;
  std::uint32_t element(const std::vector<std::uint32_t>& coefficients) const;

  /// Indicator over all q elements: true for nonzero squares.
  std::vector<bool> nonzero_squares() const;

 private:
  std::uint32_t order_ = 0;
  std::uint32_t prime_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<std::uint32_t> modulus_;
};

/// True when the monic polynomial with coefficients `poly` (low to high,
/// leading coefficient 1) has no factor of positive degree below its own over
/// GF(p).
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace kronwalk
