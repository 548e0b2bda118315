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

#include "kronwalk/kronecker_index.hpp"

#include <limits>
#include <string>

#include "kronwalk/errors.hpp"

namespace kronwalk {

std::uint64_t checked_power(std::uint64_t m, std::size_t j) {
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < j; ++k) {
    if (m != 0 && n > std::numeric_limits<std::uint64_t>::max() / m)
      throw RangeError("M^j overflows 64 bits (M=" + std::to_string(m) + ", j=" + std::to_string(j) + ")");
    n *= m;
  }
  return n;
}

KroneckerIndex index_decompose(std::uint64_t flat, std::size_t m, std::size_t j) {
  if (m < 1 || j < 1) throw RangeError("index_decompose: M and j must be positive");
  if (flat >= checked_power(m, j))
    throw RangeError("index_decompose: flat index " + std::to_string(flat) + " out of range");
  KroneckerIndex index{std::vector<std::size_t>(j), m};
  for (std::size_t k = j; k-- > 0;) {
    index.digits[k] = static_cast<std::size_t>(flat % m);
    flat /= m;
  }
  return index;
}

std::uint64_t index_compose(const KroneckerIndex& index) {
  checked_power(index.base, index.digits.size());
  std::uint64_t flat = 0;
  for (const std::size_t d : index.digits) {
    if (d >= index.base) throw RangeError("index_compose: digit out of range");
    flat = flat * index.base + d;
  }
  return flat;
}

}  // namespace kronwalk
