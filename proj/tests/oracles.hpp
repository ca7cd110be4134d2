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

// Test-only reference computations. None of these call into the library
// routine they are used to check.

#ifndef MESHSIM_TESTS_ORACLES_HPP
#define MESHSIM_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<long long>>;

inline Grid multiply(const Grid& a, const Grid& b) {
  const std::size_t n = a.size();
  Grid c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Two-digit printed rows -> (i, j) per cell, 0-based rows/cols.
inline std::vector<std::vector<std::pair<int, int>>> parse_rows(
    const std::vector<std::string>& rows) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& row : rows) {
    std::istringstream is(row);
    auto& cells = out.emplace_back();
    for (std::string tok; is >> tok;) cells.emplace_back(tok[0] - '0', tok[1] - '0');
  }
  return out;
}

// Follows a permutation given as a label map until it returns to the
// identity; counts steps.
inline std::uint64_t brute_order(const std::vector<std::size_t>& images, std::uint64_t limit) {
  std::vector<std::size_t> cur = images;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    bool id = true;
    for (std::size_t x = 0; x < cur.size(); ++x) id = id && cur[x] == x;
    if (id) return k;
    std::vector<std::size_t> next(cur.size());
    for (std::size_t x = 0; x < cur.size(); ++x) next[x] = images[cur[x]];
    cur = std::move(next);
  }
  return 0;
}

}  // namespace oracle

#endif  // MESHSIM_TESTS_ORACLES_HPP
