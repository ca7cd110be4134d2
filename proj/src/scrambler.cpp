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

#include "meshsim/scrambler.hpp"

#include <algorithm>
#include <future>

#include "meshsim/placement.hpp"

namespace meshsim {

Permutation scramble_permutation(int n) {
  require_dimension(n);
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::size_t> images(cells);
  for (std::size_t label = 0; label < cells; ++label) {
    const IndexPair p = placement_of(n, label_position(n, label));
    images[label] = label_index(n, {p.i, p.j});
  }
  return Permutation::from_images(std::move(images));
}

std::uint64_t scramble_order(int n) { return permutation_order(scramble_permutation(n)); }

OrderTable order_table(int n_min, int n_max) {
  if (n_min < 1 || n_max > 64 || n_min > n_max) {
    throw std::invalid_argument("order_table: need 1 <= from <= to <= 64, got " +
                                std::to_string(n_min) + ".." + std::to_string(n_max));
  }
  std::vector<std::future<OrderRow>> jobs;
  for (int n = n_min; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [n] {
      const CycleDecomposition d = cycle_decomposition(scramble_permutation(n));
      return OrderRow{n, d.order, d.lengths()};
    }));
  }
  OrderTable table;
  table.reserve(jobs.size());
  for (auto& job : jobs) table.push_back(job.get());
  return table;
}

namespace {

void put_be(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
  for (int shift = 8 * (bytes - 1); shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>((value >> shift) & 0xFFU));
  }
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t offset, int bytes) {
  std::uint64_t value = 0;
  for (int t = 0; t < bytes; ++t) value = (value << 8U) | in[offset + static_cast<std::size_t>(t)];
  return value;
}

std::vector<std::uint8_t> transform_blocks(std::span<const std::uint8_t> blocks, int n,
                                           const Permutation& perm) {
  const std::size_t block = perm.size();
  std::vector<std::uint8_t> out;
  out.reserve(blocks.size());
  for (std::size_t off = 0; off < blocks.size(); off += block) {
    BasicMatrix<std::uint8_t> grid(
        n, std::vector<std::uint8_t>(blocks.begin() + static_cast<std::ptrdiff_t>(off),
                                     blocks.begin() + static_cast<std::ptrdiff_t>(off + block)));
    const auto moved = permute_cells(grid, perm);
    out.insert(out.end(), moved.cells().begin(), moved.cells().end());
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> block_scramble(std::span<const std::uint8_t> payload, int n,
                                         std::uint32_t k) {
  if (payload.empty()) throw std::invalid_argument("block_scramble: empty payload");
  if (n < 2 || n > 255) throw std::invalid_argument("block_scramble: n must be in [2, 255]");
  if (k == 0) throw std::invalid_argument("block_scramble: k must be >= 1");

  const Permutation perm = power(scramble_permutation(n), k);
  const std::size_t block = perm.size();
  const std::size_t padded = (payload.size() + block - 1) / block * block;
  std::vector<std::uint8_t> plain(payload.begin(), payload.end());
  plain.resize(padded, 0);

  std::vector<std::uint8_t> out(kBlockMagic.begin(), kBlockMagic.end());
  put_be(out, payload.size(), 8);
  out.push_back(static_cast<std::uint8_t>(n));
  put_be(out, k, 4);
  const auto body = transform_blocks(plain, n, perm);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

BlockHeader read_block_header(std::span<const std::uint8_t> container) {
  if (container.size() < kBlockHeaderSize) throw FormatError("scrambled data: truncated header");
  if (!std::equal(kBlockMagic.begin(), kBlockMagic.end(), container.begin())) {
    throw FormatError("scrambled data: bad magic");
  }
  BlockHeader h;
  h.length = get_be(container, 4, 8);
  h.n = container[12];
  h.k = static_cast<std::uint32_t>(get_be(container, 13, 4));
  if (h.n < 2) throw FormatError("scrambled data: block size n must be >= 2");
  if (h.k == 0) throw FormatError("scrambled data: k must be >= 1");
  return h;
}

std::vector<std::uint8_t> block_descramble(std::span<const std::uint8_t> container) {
  const BlockHeader h = read_block_header(container);
  const auto body = container.subspan(kBlockHeaderSize);
  const std::size_t block = static_cast<std::size_t>(h.n) * static_cast<std::size_t>(h.n);
  const std::uint64_t expected = (h.length + block - 1) / block * block;
  if (h.length == 0 || body.size() != expected) {
    throw FormatError("scrambled data: body is " + std::to_string(body.size()) +
                      " bytes, header implies " + std::to_string(expected));
  }
  const Permutation perm = power(scramble_permutation(h.n), h.k).inverse();
  auto plain = transform_blocks(body, h.n, perm);
  plain.resize(static_cast<std::size_t>(h.length));
  return plain;
}

}  // namespace meshsim
