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

#include "kronwalk/finite_field.hpp"

#include <limits>
#include <string>

#include "kronwalk/errors.hpp"

namespace kronwalk {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t p) {
  // p is prime and small; Fermat via square-and-multiply.
  std::uint64_t result = 1, base = x % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g over GF(p); g must be nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(g.back(), p);
  while (f.size() > dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const std::uint64_t factor = f.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly decode(std::uint64_t code, std::uint32_t p, std::size_t len) {
  Poly f(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return f;
}

}  // namespace

std::optional<PrimePower> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1 || p > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(const Poly& poly, std::uint32_t p) {
  const std::size_t n = poly.size() - 1;
  if (n == 0) return false;
  // Any reducible polynomial has a monic factor of degree at most n/2.
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(poly, g, p).empty()) return false;
    }
  }
  return true;
}

GaloisField::GaloisField(std::uint64_t q) {
  const auto pp = prime_power_decomposition(q);
  if (!pp) throw DomainError("GF(" + std::to_string(q) + "): order is not a prime power");
  if (q > std::numeric_limits<std::uint32_t>::max())
    throw DomainError("GF(" + std::to_string(q) + "): order too large");
  order_ = static_cast<std::uint32_t>(q);
  prime_ = pp->prime;
  degree_ = pp->exponent;

  if (degree_ == 1) {
    modulus_ = {0, 1};
    return;
  }
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f = decode(code, prime_, degree_);
    f.push_back(1);
    if (is_irreducible(f, prime_)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw NumericError("GF(" + std::to_string(q) + "): no irreducible modulus found");
}

std::vector<std::uint32_t> GaloisField::coefficients(std::uint32_t x) const {
  if (x >= order_) throw RangeError("GaloisField: element index out of range");
  return decode(x, prime_, degree_);
}

std::uint32_t GaloisField::element(const std::vector<std::uint32_t>& coefficients) const {
  std::uint64_t code = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (i >= degree_ && coefficients[i] % prime_ != 0)
      throw RangeError("GaloisField: coefficient vector longer than field degree");
    if (i < degree_) code = code * prime_ + coefficients[i] % prime_;
  }
  return static_cast<std::uint32_t>(code);
}

std::uint32_t GaloisField::add(std::uint32_t x, std::uint32_t y) const {
  Poly a = coefficients(x);
  const Poly b = coefficients(y);
  for (std::size_t i = 0; i < degree_; ++i) a[i] = (a[i] + b[i]) % prime_;
  return element(a);
}

std::uint32_t GaloisField::negate(std::uint32_t x) const {
  Poly a = coefficients(x);
  for (auto& c : a) c = (prime_ - c) % prime_;
  return element(a);
}

std::uint32_t GaloisField::mul(std::uint32_t x, std::uint32_t y) const {
  const Poly a = coefficients(x);
  const Poly b = coefficients(y);
  Poly prod(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i)
    for (std::size_t k = 0; k < degree_; ++k)
      prod[i + k] = static_cast<std::uint32_t>(
          (prod[i + k] + static_cast<std::uint64_t>(a[i]) * b[k]) % prime_);
  Poly r = poly_mod(std::move(prod), modulus_, prime_);
  r.resize(degree_, 0);
  return element(r);
}

std::vector<bool> GaloisField::nonzero_squares() const {
  std::vector<bool> square(order_, false);
  for (std::uint32_t x = 1; x < order_; ++x) square[mul(x, x)] = true;
  return square;
}

}  // namespace kronwalk
