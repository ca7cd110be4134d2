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

// Output placement of the mesh array: which product component c_ij forms at
// which grid node.
//
// Number the anti-diagonals d = r + c - 1 from the top-left corner. Along
// anti-diagonal d exactly one subscript is constant, F = min(d, 2n + 1 - d);
// it is the first subscript when d is odd and the second when d is even.
// The other subscript v depends on the position m of the cell along the
// anti-diagonal (counted from its upper-right end, length L):
//
//   v = L + 2 - 2m   while 2m <= L + 1   (L, L-2, ... walking down)
//   v = 2m - L - 1   afterwards          (then 1 or 2, ... back up)
//
// Row 1 is therefore the diagonal c_11, c_22, ..., c_nn, and row r mirrors
// row n + 2 - r with its cells reversed and subscripts swapped.

#ifndef MESHSIM_PLACEMENT_HPP
#define MESHSIM_PLACEMENT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meshsim/matrix.hpp"
#include "meshsim/published.hpp"

namespace meshsim {

/// Table of hosted subscript pairs, indexed by grid position.
using Placement = LabelMatrix;

struct AntiDiagonalCoords {
  int d = 1;  // anti-diagonal, r + c - 1, in [1, 2n - 1]
  int L = 1;  // its length, min(d, 2n - d)
  int m = 1;  // position along it, in [1, L]
  int F = 1;  // value of the fixed subscript
  int v = 1;  // value of the varying subscript, in [1, L]
};

AntiDiagonalCoords anti_diagonal_coords(int n, GridPosition pos);

/// Pair hosted at pos. Throws DimensionError outside the grid.
IndexPair placement_of(int n, GridPosition pos);

/// Node hosting pair; the inverse of placement_of.
GridPosition locate(int n, IndexPair pair);

Placement placement_table(int n);

struct SymmetryViolation {
  std::string law;
  GridPosition pos;
};

struct SymmetryReport {
  int n = 0;
  bool bijective = true;
  bool row1_diagonal = true;
  bool mirror_rows = true;
  // Vacuously true for odd n, which has no self-paired row.
  bool middle_row_self_symmetric = true;
  bool anti_diagonal_law = true;
  std::vector<SymmetryViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks an arbitrary table against the mesh placement laws. Violations are
/// collected, never thrown.
SymmetryReport verify_symmetries(const Placement& table);
SymmetryReport verify_symmetries(int n);

struct CellMismatch {
  GridPosition pos;
  std::string printed;
  IndexPair generated;
  bool registered = false;  // matches a known erratum
};

struct ConformanceReport {
  int n = 0;
  std::vector<CellMismatch> mismatches;
  std::vector<Erratum> errata;  // registered errata that were hit

  bool passed() const;
  std::vector<CellMismatch> unexpected() const;
};

/// Cell-by-cell comparison of a generated table with rows printed in
/// two-digit notation ("11 22 33 44"). A mismatch is registered when an
/// erratum for `artifact` names the same cell and printed value.
ConformanceReport compare_table(std::string_view artifact, const Placement& generated,
                                std::span<const std::string> printed_rows,
                                std::span<const Erratum> errata);

/// placement_table(n) against the built-in published table; n in 3..7.
/// Throws std::invalid_argument for any other n.
ConformanceReport published_conformance(int n);

}  // namespace meshsim

#endif  // MESHSIM_PLACEMENT_HPP
