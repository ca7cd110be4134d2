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

#ifndef MESHSIM_MATRIX_HPP
#define MESHSIM_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meshsim {

/// Thrown when operands disagree on dimension or an index leaves [1, n].
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Node coordinate on the n x n grid, 1-based.
struct GridPosition {
  int r = 1;
  int c = 1;

  friend auto operator<=>(const GridPosition&, const GridPosition&) = default;
};

/// Subscript pair of a product component: (i, j) names c_ij. 1-based.
struct IndexPair {
  int i = 1;
  int j = 1;

  IndexPair transposed() const { return {j, i}; }

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

inline bool in_range(int n, GridPosition p) {
  return p.r >= 1 && p.r <= n && p.c >= 1 && p.c <= n;
}
inline bool in_range(int n, IndexPair p) {
  return p.i >= 1 && p.i <= n && p.j >= 1 && p.j <= n;
}

void require_dimension(int n);
void require_position(int n, GridPosition p);
void require_pair(int n, IndexPair p);

/// Square n x n grid stored row-major; all accessors are 1-based.
///
/// The cell type is open so the same container holds exact integers,
/// subscript labels, or opaque payload bytes.
template <class T>
class BasicMatrix {
 public:
  explicit BasicMatrix(int n, const T& fill = T{}) : n_(n) {
    require_dimension(n);
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill);
  }

  BasicMatrix(int n, std::vector<T> cells) : n_(n), cells_(std::move(cells)) {
    require_dimension(n);
    if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
      throw DimensionError("matrix: expected " + std::to_string(n * n) + " cells, got " +
                           std::to_string(cells_.size()));
    }
  }

  static BasicMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<T> cells;
    cells.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw DimensionError("matrix: rows must form a square");
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return BasicMatrix(n, std::move(cells));
  }

  int n() const { return n_; }

  T& operator()(int r, int c) { return cells_[offset(r, c)]; }
  const T& operator()(int r, int c) const { return cells_[offset(r, c)]; }
  T& operator[](GridPosition p) { return (*this)(p.r, p.c); }
  const T& operator[](GridPosition p) const { return (*this)(p.r, p.c); }

  T& at(GridPosition p) {
    require_position(n_, p);
    return (*this)[p];
  }
  const T& at(GridPosition p) const {
    require_position(n_, p);
    return (*this)[p];
  }

  std::span<const T> row(int r) const {
    return std::span<const T>(cells_).subspan(offset(r, 1), static_cast<std::size_t>(n_));
  }

  // Row-major.
  std::span<const T> cells() const { return cells_; }
  std::span<T> cells() { return cells_; }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

 private:
  std::size_t offset(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(c - 1);
  }

  int n_;
  std::vector<T> cells_;
};

using Scalar = std::int64_t;
using Matrix = BasicMatrix<Scalar>;
using LabelMatrix = BasicMatrix<IndexPair>;

Matrix identity_matrix(int n);

/// Cell (r, c) holds the pair (r, c): the "standard array" of labels.
LabelMatrix standard_labels(int n);

/// Reference product C = AB by the defining triple sum, ascending k.
/// Throws DimensionError on mismatched operands and std::overflow_error
/// if any partial sum leaves the int64 range.
Matrix matmul_direct(const Matrix& a, const Matrix& b);

/// Fills an n x n matrix from a 64-bit Mersenne Twister, row-major, with
/// entries (draw mod (2*bound+1)) - bound. Both std::mt19937_64 and the
/// reduction are fully specified, so a seed gives the same matrix on every
/// platform.
Matrix random_matrix(int n, std::mt19937_64& gen, Scalar bound = 9);

}  // namespace meshsim

#endif  // MESHSIM_MATRIX_HPP
