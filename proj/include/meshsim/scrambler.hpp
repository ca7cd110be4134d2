// Copyright 2026 The meshsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The scrambling transformation S: multiplying M by the identity on the mesh
// array leaves M's entries at the mesh placement instead of in standard
// order. As a permutation of grid labels, sigma(p) = placement_of(n, p) and
// one application gives result[p] = M[sigma(p)].
//
// Not a cipher. The order of S is small for small n (7 at n = 3 and 4) and
// the transform is unkeyed.

#ifndef MESHSIM_SCRAMBLER_HPP
#define MESHSIM_SCRAMBLER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "meshsim/matrix.hpp"
#include "meshsim/permutation.hpp"

namespace meshsim {

Permutation scramble_permutation(int n);

/// result[p] = m[perm(p)], with perm acting on row-major grid labels.
template <class T>
BasicMatrix<T> permute_cells(const BasicMatrix<T>& m, const Permutation& perm) {
  const int n = m.n();
  if (perm.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DimensionError("permute_cells: permutation acts on " + std::to_string(perm.size()) +
                         " labels, matrix has " + std::to_string(n * n) + " cells");
  }
  const auto src = m.cells();
  std::vector<T> out(src.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = src[perm(p)];
  return BasicMatrix<T>(n, std::move(out));
}

template <class T>
BasicMatrix<T> scramble(const BasicMatrix<T>& m) {
  return permute_cells(m, scramble_permutation(m.n()));
}

template <class T>
BasicMatrix<T> descramble(const BasicMatrix<T>& m) {
  return permute_cells(m, scramble_permutation(m.n()).inverse());
}

/// k applications of scramble, computed as one pass with sigma^k.
template <class T>
BasicMatrix<T> iterate_scramble(const BasicMatrix<T>& m, std::uint64_t k) {
  return permute_cells(m, power(scramble_permutation(m.n()), k));
}

std::uint64_t scramble_order(int n);

struct OrderRow {
  int n = 0;
  std::uint64_t order = 0;
  std::vector<std::size_t> cycle_lengths;  // ascending

  friend bool operator==(const OrderRow&, const OrderRow&) = default;
};

using OrderTable = std::vector<OrderRow>;

/// One row per n in [n_min, n_max]; requires 1 <= n_min <= n_max <= 64.
/// Rows are computed concurrently and returned in ascending n.
OrderTable order_table(int n_min, int n_max);

// Scrambled payload container:
//
//   "MMS1" | length u64 BE | n u8 | k u32 BE | blocks
//
// The payload is cut into n*n-byte blocks, the last one zero-padded; each
// block is laid out row-major on the grid and scrambled k times.

inline constexpr std::array<std::uint8_t, 4> kBlockMagic{'M', 'M', 'S', '1'};
inline constexpr std::size_t kBlockHeaderSize = kBlockMagic.size() + 13;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BlockHeader {
  std::uint64_t length = 0;
  int n = 0;
  std::uint32_t k = 0;
};

/// Throws std::invalid_argument for an empty payload, n outside [2, 255],
/// or k == 0.
std::vector<std::uint8_t> block_scramble(std::span<const std::uint8_t> payload, int n,
                                         std::uint32_t k);

/// Throws FormatError on a bad magic, truncated input or a block area whose
/// size disagrees with the header.
std::vector<std::uint8_t> block_descramble(std::span<const std::uint8_t> container);

BlockHeader read_block_header(std::span<const std::uint8_t> container);

}  // namespace meshsim

#endif  // MESHSIM_SCRAMBLER_HPP
