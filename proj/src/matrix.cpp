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

#include "meshsim/matrix.hpp"

#include <stdexcept>

namespace meshsim {

void require_dimension(int n) {
  if (n < 1) throw DimensionError("dimension must be >= 1, got " + std::to_string(n));
}

void require_position(int n, GridPosition p) {
  if (!in_range(n, p)) {
    throw DimensionError("position (" + std::to_string(p.r) + "," + std::to_string(p.c) +
                         ") outside 1.." + std::to_string(n));
  }
}

void require_pair(int n, IndexPair p) {
  if (!in_range(n, p)) {
    throw DimensionError("index pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                         ") outside 1.." + std::to_string(n));
  }
}

Matrix identity_matrix(int n) {
  Matrix m(n, 0);
  for (int k = 1; k <= n; ++k) m(k, k) = 1;
  return m;
}

LabelMatrix standard_labels(int n) {
  LabelMatrix m(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) m(r, c) = IndexPair{r, c};
  return m;
}

Matrix matmul_direct(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) {
    throw DimensionError("matmul: incompatible operands " + std::to_string(a.n()) + "x" +
                         std::to_string(a.n()) + " and " + std::to_string(b.n()) + "x" +
                         std::to_string(b.n()));
  }
  const int n = a.n();
  Matrix c(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Scalar acc = 0;
      for (int k = 1; k <= n; ++k) {
        Scalar prod = 0;
        if (__builtin_mul_overflow(a(i, k), b(k, j), &prod) ||
            __builtin_add_overflow(acc, prod, &acc)) {
          throw std::overflow_error("matmul: int64 overflow");
        }
      }
      c(i, j) = acc;
    }
  }
  return c;
}

Matrix random_matrix(int n, std::mt19937_64& gen, Scalar bound) {
  if (bound < 0) throw std::invalid_argument("random_matrix: bound must be >= 0");
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  Matrix m(n, 0);
  for (auto& cell : m.cells()) cell = static_cast<Scalar>(gen() % span) - bound;
  return m;
}

}  // namespace meshsim
