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

// Published reference artifacts for the mesh array, transcribed verbatim
// (including the two printed cells that contradict the placement laws),
// plus the registry of those known errata.

#ifndef MESHSIM_PUBLISHED_HPP
#define MESHSIM_PUBLISHED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "meshsim/matrix.hpp"

namespace meshsim {

struct Erratum {
  std::string artifact;
  GridPosition cell;
  std::string printed;
  std::string derived;

  friend bool operator==(const Erratum&, const Erratum&) = default;
};

struct PrintedTable {
  std::string artifact;
  int n = 0;
  std::vector<std::string> rows;
};

struct PrintedCycles {
  int n = 0;
  std::string cycles;
};

struct PrintedOrder {
  int n = 0;
  std::uint64_t order = 0;
};

struct PrintedStepCount {
  bool mesh = true;
  int n = 0;
  int steps = 0;
};

/// Everything the conformance suite compares against. Held by value so a
/// test can corrupt a copy.
struct ReferenceData {
  std::vector<PrintedTable> placement_tables;  // n = 3..7
  std::vector<PrintedTable> s_iterates;        // n = 3, S^1..S^7
  std::vector<PrintedCycles> cycles;           // n = 3, 4, 5
  std::vector<PrintedOrder> orders;            // n = 3, 4, 5
  std::vector<PrintedStepCount> step_counts;
  std::vector<Erratum> errata;

  static const ReferenceData& builtin();

  const PrintedTable* placement_table(int n) const;
};

/// Artifact name used for the placement table of size n, e.g. "table n=7".
std::string placement_artifact(int n);
/// Artifact name used for the k-th iterate of the 3x3 scramble, "S^k n=3".
std::string iterate_artifact(int k);

}  // namespace meshsim

#endif  // MESHSIM_PUBLISHED_HPP
