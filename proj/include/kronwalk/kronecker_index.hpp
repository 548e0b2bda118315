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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kronwalk {

/// Vertex of the j-th Kronecker power of an M-vertex initiator, written as one
/// initiator vertex per tensor factor. The first factor is the most
/// significant digit of the flat index.
struct KroneckerIndex {
  std::vector<std::size_t> digits;
  std::size_t base = 0;  // M

  std::size_t power() const noexcept { return digits.size(); }
  friend bool operator==(const KroneckerIndex&, const KroneckerIndex&) = default;
};

/// M^j; throws RangeError when it does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t m, std::size_t j);

KroneckerIndex index_decompose(std::uint64_t flat, std::size_t m, std::size_t j);
std::uint64_t index_compose(const KroneckerIndex& index);

}  // namespace kronwalk
