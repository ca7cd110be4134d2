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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "meshsim/placement.hpp"
#include "meshsim/published.hpp"
#include "oracles.hpp"

namespace meshsim {
namespace {

std::vector<std::uint8_t> bytes(const std::string& s) { return {s.begin(), s.end()}; }

std::vector<std::uint8_t> random_bytes(std::size_t len, std::mt19937_64& gen) {
  std::vector<std::uint8_t> out(len);
  for (auto& b : out) b = static_cast<std::uint8_t>(gen());
  return out;
}

TEST(ScramblePermutationTest, Examples) {
  const Permutation s3 = scramble_permutation(3);
  EXPECT_EQ(label_position(3, s3(label_index(3, {1, 2}))), (GridPosition{2, 2}));
  const Permutation s4 = scramble_permutation(4);
  EXPECT_EQ(s4(label_index(4, {4, 2})), label_index(4, {4, 2}));
  EXPECT_TRUE(scramble_permutation(1).is_identity());
}

TEST(ScramblePermutationTest, TopLeftAlwaysFixed) {
  for (int n = 1; n <= 32; ++n) EXPECT_EQ(scramble_permutation(n)(0), 0U);
}

TEST(ScrambleTest, StandardLabelsGiveThePlacementTable) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(scramble(standard_labels(n)), placement_table(n));
}

TEST(ScrambleTest, ThreeByThreeIterates) {
  const LabelMatrix once = scramble(standard_labels(3));
  EXPECT_EQ(once, LabelMatrix::from_rows({{{1, 1}, {2, 2}, {3, 3}},
                                          {{1, 2}, {3, 1}, {2, 3}},
                                          {{3, 2}, {1, 3}, {2, 1}}}));
  const LabelMatrix twice = scramble(once);
  EXPECT_EQ(twice(1, 3), (IndexPair{2, 1}));
  // Printed as "32"; following the cycle 12 -> 22 -> 31 gives 31.
  EXPECT_EQ(twice(1, 2), (IndexPair{3, 1}));

  const LabelMatrix third = iterate_scramble(standard_labels(3), 3);
  EXPECT_EQ(third, LabelMatrix::from_rows({{{1, 1}, {3, 2}, {1, 2}},
                                           {{3, 1}, {1, 3}, {2, 3}},
                                           {{3, 3}, {2, 1}, {2, 2}}}));
}

TEST(ScrambleTest, OneByOneIsIdentity) {
  const Matrix m = Matrix::from_rows({{42}});
  EXPECT_EQ(scramble(m), m);
  EXPECT_EQ(descramble(m), m);
}

TEST(ScrambleTest, DescrambleInverts) {
  std::mt19937_64 gen(8);
  const Matrix m = random_matrix(5, gen);
  EXPECT_EQ(descramble(scramble(m)), m);
  EXPECT_EQ(scramble(descramble(m)), m);
  EXPECT_EQ(descramble(placement_table(3)), standard_labels(3));
}

TEST(ScrambleTest, IterateZeroIsIdentity) {
  std::mt19937_64 gen(8);
  const Matrix m = random_matrix(6, gen);
  EXPECT_EQ(iterate_scramble(m, 0), m);
  EXPECT_EQ(iterate_scramble(standard_labels(4), 7), standard_labels(4));
}

TEST(ScrambleTest, PermuteCellsRejectsWrongSize) {
  EXPECT_THROW(permute_cells(Matrix(3), Permutation::identity(4)), DimensionError);
}

TEST(ScrambleOrderTest, Examples) {
  EXPECT_EQ(scramble_order(3), 7U);
  EXPECT_EQ(scramble_order(4), 7U);
  EXPECT_EQ(scramble_order(5), 20U);
  EXPECT_EQ(scramble_order(2), 3U);
  EXPECT_EQ(scramble_order(1), 1U);
}

// Orders and cycle types for n = 1..10, frozen from an exhaustive
// label-chasing run independent of this library.
TEST(OrderTableTest, FrozenSmallRows) {
  const OrderTable want{
      {1, 1, {1}},
      {2, 3, {1, 3}},
      {3, 7, {1, 1, 7}},
      {4, 7, {1, 1, 7, 7}},
      {5, 20, {1, 4, 20}},
      {6, 230, {1, 2, 10, 23}},
      {7, 855, {1, 5, 9, 15, 19}},
      {8, 189, {1, 1, 7, 7, 21, 27}},
      {9, 79, {1, 1, 79}},
      {10, 56420, {1, 4, 7, 7, 10, 14, 26, 31}},
  };
  EXPECT_EQ(order_table(1, 10), want);
}

TEST(OrderTableTest, RangeValidation) {
  EXPECT_THROW(order_table(0, 3), std::invalid_argument);
  EXPECT_THROW(order_table(5, 4), std::invalid_argument);
  EXPECT_THROW(order_table(1, 65), std::invalid_argument);
  EXPECT_EQ(order_table(64, 64).size(), 1U);
}

TEST(ScramblePropertyTest, OrderIsMinimalAndRestores) {
  std::mt19937_64 gen(31);
  for (int n = 1; n <= 32; ++n) {
    const std::uint64_t order = scramble_order(n);
    const Matrix m = random_matrix(n, gen, 1000);
    EXPECT_EQ(iterate_scramble(m, order), m);
    if (order <= 50000) {
      const Permutation s = scramble_permutation(n);
      EXPECT_EQ(oracle::brute_order({s.images().begin(), s.images().end()}, 50000), order)
          << "n=" << n;
    }
    // Minimality on the label matrix: every proper divisor leaves it moved.
    for (std::uint64_t d = 1; d < order && d <= 1000000; ++d) {
      if (order % d != 0) continue;
      EXPECT_NE(iterate_scramble(standard_labels(n), d), standard_labels(n)) << n << " " << d;
    }
  }
}

TEST(ScramblePropertyTest, PowerMatchesRepeatedApplication) {
  for (int n : {2, 3, 4, 5, 6}) {
    std::mt19937_64 gen(static_cast<std::uint64_t>(n));
    const Matrix m = random_matrix(n, gen);
    Matrix stepped = m;
    const std::uint64_t order = scramble_order(n);
    for (std::uint64_t k = 0; k <= 2 * order && k <= 500; ++k) {
      EXPECT_EQ(iterate_scramble(m, k), stepped) << "n=" << n << " k=" << k;
      stepped = scramble(stepped);
    }
  }
}

TEST(BlockScrambleTest, NineBytesOneBlock) {
  const auto out = block_scramble(bytes("ABCDEFGHI"), 3, 1);
  ASSERT_EQ(out.size(), kBlockHeaderSize + 9);
  const std::string body(out.begin() + kBlockHeaderSize, out.end());
  // Output byte at p is input byte at sigma(p) = the n=3 placement.
  EXPECT_EQ(body, "AEIBGFHCD");
}

TEST(BlockScrambleTest, HeaderLayout) {
  const auto out = block_scramble(bytes("hello"), 4, 3);
  const std::vector<std::uint8_t> want_header{'M', 'M', 'S', '1', 0, 0, 0, 0, 0, 0, 0, 5,
                                              4,   0,   0,   0,   3};
  ASSERT_EQ(out.size(), kBlockHeaderSize + 16);
  EXPECT_TRUE(std::equal(want_header.begin(), want_header.end(), out.begin()));
  const BlockHeader h = read_block_header(out);
  EXPECT_EQ(h.length, 5U);
  EXPECT_EQ(h.n, 4);
  EXPECT_EQ(h.k, 3U);
}

TEST(BlockScrambleTest, OrderApplicationsLeaveBlocksUnchanged) {
  std::mt19937_64 gen(4);
  for (int n : {2, 3, 4, 5}) {
    const auto payload = random_bytes(static_cast<std::size_t>(n * n * 3), gen);
    const auto out = block_scramble(payload, n, static_cast<std::uint32_t>(scramble_order(n)));
    EXPECT_TRUE(std::equal(payload.begin(), payload.end(), out.begin() + kBlockHeaderSize));
  }
}

TEST(BlockScrambleTest, Errors) {
  EXPECT_THROW(block_scramble({}, 3, 1), std::invalid_argument);
  EXPECT_THROW(block_scramble(bytes("x"), 1, 1), std::invalid_argument);
  EXPECT_THROW(block_scramble(bytes("x"), 3, 0), std::invalid_argument);

  auto good = block_scramble(bytes("payload"), 3, 2);
  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(block_descramble(bad_magic), FormatError);
  auto truncated = good;
  truncated.pop_back();
  EXPECT_THROW(block_descramble(truncated), FormatError);
  EXPECT_THROW(block_descramble(std::vector<std::uint8_t>(5, 0)), FormatError);
}

TEST(BlockScramblePropertyTest, RoundTrip) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + gen() % 700;
    const int n = 2 + static_cast<int>(gen() % 9);
    const auto k = static_cast<std::uint32_t>(1 + gen() % 50);
    const auto payload = random_bytes(len, gen);
    EXPECT_EQ(block_descramble(block_scramble(payload, n, k)), payload)
        << "len=" << len << " n=" << n << " k=" << k;
  }
  const auto big = random_bytes(10 * 1024, gen);
  EXPECT_EQ(block_descramble(block_scramble(big, 5, 7)), big);
}

}  // namespace
}  // namespace meshsim
