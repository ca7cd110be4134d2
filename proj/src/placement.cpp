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

#include "meshsim/placement.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace meshsim {

AntiDiagonalCoords anti_diagonal_coords(int n, GridPosition pos) {
  require_position(n, pos);
  AntiDiagonalCoords k;
  k.d = pos.r + pos.c - 1;
  k.L = std::min(k.d, 2 * n - k.d);
  k.m = k.d <= n ? pos.r : pos.r - (k.d - n);
  k.F = std::min(k.d, 2 * n + 1 - k.d);
  k.v = 2 * k.m <= k.L + 1 ? k.L + 2 - 2 * k.m : 2 * k.m - k.L - 1;
  return k;
}

IndexPair placement_of(int n, GridPosition pos) {
  const AntiDiagonalCoords k = anti_diagonal_coords(n, pos);
  return k.d % 2 == 1 ? IndexPair{k.F, k.v} : IndexPair{k.v, k.F};
}

namespace {

// Cell on anti-diagonal d whose varying subscript is v, if there is one.
bool cell_on_anti_diagonal(int n, int d, int v, GridPosition& out) {
  if (d < 1 || d > 2 * n - 1) return false;
  const int len = std::min(d, 2 * n - d);
  if (v < 1 || v > len) return false;
  // Invert v(m): the descending branch hits values with the parity of L.
  const int m = (len - v) % 2 == 0 ? (len + 2 - v) / 2 : (v + len + 1) / 2;
  const int r = d <= n ? m : m + (d - n);
  out = {r, d + 1 - r};
  return in_range(n, out);
}

}  // namespace

GridPosition locate(int n, IndexPair pair) {
  require_dimension(n);
  require_pair(n, pair);
  // The first subscript is fixed on odd anti-diagonals, the second on even
  // ones; F(d) = x has the two solutions d = x and d = 2n + 1 - x.
  const std::array<std::array<int, 3>, 4> candidates{{
      {pair.i, pair.j, 1},
      {2 * n + 1 - pair.i, pair.j, 1},
      {pair.j, pair.i, 0},
      {2 * n + 1 - pair.j, pair.i, 0},
  }};
  for (const auto& [d, v, odd] : candidates) {
    if (d % 2 != odd) continue;
    GridPosition pos;
    if (cell_on_anti_diagonal(n, d, v, pos) && placement_of(n, pos) == pair) return pos;
  }
  throw std::logic_error("locate: no node hosts (" + std::to_string(pair.i) + "," +
                         std::to_string(pair.j) + ")");
}

Placement placement_table(int n) {
  Placement table(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) table(r, c) = placement_of(n, {r, c});
  return table;
}

SymmetryReport verify_symmetries(const Placement& table) {
  const int n = table.n();
  SymmetryReport rep;
  rep.n = n;
  auto violate = [&rep](bool& flag, const char* law, GridPosition pos) {
    flag = false;
    rep.violations.push_back({law, pos});
  };

  Placement seen_at(n, IndexPair{0, 0});
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const IndexPair p = table(r, c);
      if (!in_range(n, p)) {
        violate(rep.bijective, "bijective", {r, c});
        continue;
      }
      IndexPair& slot = seen_at(p.i, p.j);
      if (slot.i != 0) {
        violate(rep.bijective, "bijective", {r, c});
      } else {
        slot = {r, c};
      }
    }
  }

  for (int k = 1; k <= n; ++k)
    if (table(1, k) != IndexPair{k, k}) violate(rep.row1_diagonal, "row1-diagonal", {1, k});

  // Row r pairs with row n + 2 - r; for even n the middle row n/2 + 1 pairs
  // with itself.
  for (int r = 2; r <= n; ++r) {
    const int mirror_row = n + 2 - r;
    const bool self_paired = mirror_row == r;
    for (int c = 1; c <= n; ++c) {
      if (table(r, c).transposed() == table(mirror_row, n + 1 - c)) continue;
      if (self_paired) {
        violate(rep.middle_row_self_symmetric, "middle-row-self-symmetry", {r, c});
      } else {
        violate(rep.mirror_rows, "mirror-rows", {r, c});
      }
    }
  }

  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const int d = r + c - 1;
      const int fixed = std::min(d, 2 * n + 1 - d);
      const IndexPair p = table(r, c);
      if ((d % 2 == 1 ? p.i : p.j) != fixed) {
        violate(rep.anti_diagonal_law, "anti-diagonal", {r, c});
      }
    }
  }
  return rep;
}

SymmetryReport verify_symmetries(int n) { return verify_symmetries(placement_table(n)); }

bool ConformanceReport::passed() const {
  return std::all_of(mismatches.begin(), mismatches.end(),
                     [](const CellMismatch& m) { return m.registered; });
}

std::vector<CellMismatch> ConformanceReport::unexpected() const {
  std::vector<CellMismatch> out;
  std::copy_if(mismatches.begin(), mismatches.end(), std::back_inserter(out),
               [](const CellMismatch& m) { return !m.registered; });
  return out;
}

namespace {

std::vector<std::string> split_cells(const std::string& row) {
  std::istringstream is(row);
  std::vector<std::string> out;
  for (std::string cell; is >> cell;) out.push_back(cell);
  return out;
}

std::string two_digit(IndexPair p) { return std::to_string(p.i) + std::to_string(p.j); }

}  // namespace

ConformanceReport compare_table(std::string_view artifact, const Placement& generated,
                                std::span<const std::string> printed_rows,
                                std::span<const Erratum> errata) {
  const int n = generated.n();
  if (n > 9) throw std::invalid_argument("compare_table: two-digit notation needs n <= 9");
  if (printed_rows.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("compare_table: " + std::string(artifact) + " has " +
                         std::to_string(printed_rows.size()) + " rows, expected " +
                         std::to_string(n));
  }
  ConformanceReport rep;
  rep.n = n;
  for (int r = 1; r <= n; ++r) {
    const auto cells = split_cells(printed_rows[static_cast<std::size_t>(r - 1)]);
    if (cells.size() != static_cast<std::size_t>(n)) {
      throw DimensionError("compare_table: " + std::string(artifact) + " row " +
                           std::to_string(r) + " has " + std::to_string(cells.size()) +
                           " cells");
    }
    for (int c = 1; c <= n; ++c) {
      const std::string& printed = cells[static_cast<std::size_t>(c - 1)];
      const IndexPair gen = generated(r, c);
      if (printed == two_digit(gen)) continue;
      CellMismatch mm{{r, c}, printed, gen, false};
      for (const auto& e : errata) {
        if (e.artifact == artifact && e.cell == mm.pos && e.printed == printed &&
            e.derived == two_digit(gen)) {
          mm.registered = true;
          rep.errata.push_back(e);
        }
      }
      rep.mismatches.push_back(mm);
    }
  }
  return rep;
}

ConformanceReport published_conformance(int n) {
  const ReferenceData& ref = ReferenceData::builtin();
  const PrintedTable* t = ref.placement_table(n);
  if (t == nullptr) {
    throw std::invalid_argument("no published placement table for n=" + std::to_string(n));
  }
  return compare_table(t->artifact, placement_table(n), t->rows, ref.errata);
}

}  // namespace meshsim
