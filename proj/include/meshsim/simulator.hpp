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

// Discrete-time simulation of the standard and mesh systolic arrays.
//
// Operands are delivered to nodes from a timetable rather than routed along
// wires. Steps are 1-based clock ticks on which at least one node performs a
// multiply-accumulate (MAC); every node consumes k = 1..n in ascending order.
//
//   mesh      node (r, c) runs its k-th MAC at step (r - 1) + k
//   standard  node (i, j) runs its k-th MAC at step (i - 1) + (j - 1) + k
//
// so the mesh finishes at 2n - 1 and the skewed standard array at 3n - 2.

#ifndef MESHSIM_SIMULATOR_HPP
#define MESHSIM_SIMULATOR_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "meshsim/matrix.hpp"

namespace meshsim {

enum class ArrayKind { standard, mesh };

std::string_view to_string(ArrayKind kind);

struct SimConfig {
  ArrayKind kind = ArrayKind::mesh;
  int n = 1;
  bool trace_enabled = false;
};

struct NodeState {
  GridPosition pos;
  IndexPair hosted;
  Scalar accumulator = 0;
  int macs_done = 0;
  int finish_step = 0;
};

struct MacEvent {
  int step = 0;
  GridPosition pos;
  int k = 0;
  Scalar a = 0;  // a_{i,k}
  Scalar b = 0;  // b_{k,j}
  Scalar acc = 0;

  friend bool operator==(const MacEvent&, const MacEvent&) = default;
};

// Ordered by step, then row-major node position.
using SimTrace = std::vector<MacEvent>;

struct SimReport {
  ArrayKind kind = ArrayKind::mesh;
  int total_steps = 0;
  BasicMatrix<int> finish_times{1};
  // Accumulators as they sit on the grid.
  Matrix node_values{1};
  // Reassembled into standard order through the hosting map.
  Matrix output{1};
  bool placement_ok = false;
  bool oracle_ok = false;
  std::vector<NodeState> nodes;  // row-major
};

struct SimResult {
  SimReport report;
  std::optional<SimTrace> trace;
};

/// Product component accumulated at pos.
IndexPair hosted_pair(ArrayKind kind, int n, GridPosition pos);

/// Grid node that accumulates c_ij.
GridPosition host_of(ArrayKind kind, int n, IndexPair pair);

/// Step on which the node at pos runs its k-th MAC.
int mac_step(ArrayKind kind, int n, GridPosition pos, int k);

SimResult simulate(const SimConfig& config, const Matrix& a, const Matrix& b);

int total_steps(ArrayKind kind, int n);

BasicMatrix<int> finish_time_map(ArrayKind kind, int n);

/// Step by which every distinct value of a symmetric product is available
/// on the mesh: for each pair {c_ij, c_ji} take the earlier of the two
/// hosting nodes' finish times, then the latest such time over all pairs.
/// Timing only; the caller guarantees C is symmetric.
int symmetric_readout_time(int n);

/// floor(3n/2 + 1), the published upper bound for the readout above.
int symmetric_readout_bound(int n);

}  // namespace meshsim

#endif  // MESHSIM_SIMULATOR_HPP
