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

#ifndef MESHSIM_PERMUTATION_HPP
#define MESHSIM_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshsim/matrix.hpp"

namespace meshsim {

/// Thrown when two permutations act on different label sets or an image
/// list is not a bijection.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection on the labels 0..size-1.
///
/// Grid permutations use the row-major label of a position, see
/// label_index(); the printed "rc" form is a rendering of that label.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t size);

  /// images[x] is the image of x. Throws PermutationError unless every
  /// label appears exactly once.
  static Permutation from_images(std::vector<std::size_t> images);

  /// Labels not mentioned in any cycle are fixed. Throws PermutationError
  /// on repeated or out-of-range labels.
  static Permutation from_cycles(std::size_t size,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_.at(x); }
  std::span<const std::size_t> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {}

  std::vector<std::size_t> images_;
};

/// (p o q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

/// p applied k times, by repeated squaring; power(p, 0) is the identity.
Permutation power(const Permutation& p, std::uint64_t k);

struct CycleDecomposition {
  // Each cycle starts at its smallest label; cycles sorted by first label.
  // Fixed points appear as 1-cycles.
  std::vector<std::vector<std::size_t>> cycles;
  std::uint64_t order = 1;

  /// Cycle lengths in ascending order (the cycle type as a multiset).
  std::vector<std::size_t> lengths() const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// lcm of the cycle lengths. Throws std::overflow_error past 2^64 - 1.
std::uint64_t permutation_order(const Permutation& p);

/// Smallest k in [1, limit] with p^k = identity, found by stepping p
/// forward one composition at a time. nullopt if none within the limit.
std::optional<std::uint64_t> order_by_iteration(const Permutation& p, std::uint64_t limit);

/// True when the two cycle lists contain the same cycles, each compared up
/// to rotation, in any order.
bool same_cycles_up_to_rotation(std::vector<std::vector<std::size_t>> a,
                                std::vector<std::vector<std::size_t>> b);

// Grid labels. A position on the n x n grid has label (r-1)*n + (c-1).

std::size_t label_index(int n, GridPosition p);
GridPosition label_position(int n, std::size_t label);

/// "rc" for n <= 9, "(r,c)" otherwise.
std::string format_label(int n, GridPosition p);

/// "(11) (12 22 31 ...)" in the label format above.
std::string format_cycles(int n, const CycleDecomposition& d);

/// Parses cycle notation written with two-digit labels, e.g.
/// "(11) (42) (12 22 31 32 14 44 21)". Only valid for n <= 9.
std::vector<std::vector<std::size_t>> parse_cycles(int n, const std::string& text);

}  // namespace meshsim

#endif  // MESHSIM_PERMUTATION_HPP
