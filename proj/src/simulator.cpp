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

#include "meshsim/simulator.hpp"

#include <algorithm>
#include <stdexcept>

#include "meshsim/placement.hpp"

namespace meshsim {

std::string_view to_string(ArrayKind kind) {
  return kind == ArrayKind::mesh ? "mesh" : "standard";
}

IndexPair hosted_pair(ArrayKind kind, int n, GridPosition pos) {
  if (kind == ArrayKind::mesh) return placement_of(n, pos);
  require_position(n, pos);
  return {pos.r, pos.c};
}

GridPosition host_of(ArrayKind kind, int n, IndexPair pair) {
  if (kind == ArrayKind::mesh) return locate(n, pair);
  require_pair(n, pair);
  return {pair.i, pair.j};
}

int mac_step(ArrayKind kind, int n, GridPosition pos, int k) {
  require_position(n, pos);
  if (k < 1 || k > n) throw DimensionError("mac_step: k outside 1..n");
  if (kind == ArrayKind::mesh) return (pos.r - 1) + k;
  return (pos.r - 1) + (pos.c - 1) + k;
}

SimResult simulate(const SimConfig& config, const Matrix& a, const Matrix& b) {
  const int n = config.n;
  require_dimension(n);
  if (a.n() != n || b.n() != n) {
    throw DimensionError("simulate: operands are " + std::to_string(a.n()) + "x" +
                         std::to_string(a.n()) + " and " + std::to_string(b.n()) + "x" +
                         std::to_string(b.n()) + ", array is " + std::to_string(n) + "x" +
                         std::to_string(n));
  }

  SimResult result;
  SimReport& rep = result.report;
  rep.kind = config.kind;
  if (config.trace_enabled) result.trace.emplace();

  rep.nodes.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      rep.nodes.push_back({{r, c}, hosted_pair(config.kind, n, {r, c}), 0, 0, 0});

  // Clock loop: on each tick every node whose next MAC is due fires.
  std::size_t pending = rep.nodes.size();
  int last_active = 0;
  for (int step = 1; pending > 0; ++step) {
    for (NodeState& node : rep.nodes) {
      if (node.macs_done == n) continue;
      const int k = node.macs_done + 1;
      const int due = mac_step(config.kind, n, node.pos, k);
      if (due < step) throw std::logic_error("simulate: node missed its MAC slot");
      if (due != step) continue;

      const Scalar av = a(node.hosted.i, k);
      const Scalar bv = b(k, node.hosted.j);
      Scalar prod = 0;
      if (__builtin_mul_overflow(av, bv, &prod) ||
          __builtin_add_overflow(node.accumulator, prod, &node.accumulator)) {
        throw std::overflow_error("simulate: int64 overflow");
      }
      node.macs_done = k;
      node.finish_step = step;
      last_active = step;
      if (k == n) --pending;
      if (result.trace) {
        result.trace->push_back({step, node.pos, k, av, bv, node.accumulator});
      }
    }
  }
  rep.total_steps = last_active;

  rep.finish_times = BasicMatrix<int>(n, 0);
  rep.node_values = Matrix(n, 0);
  rep.output = Matrix(n, 0);
  LabelMatrix seen(n, IndexPair{0, 0});
  rep.placement_ok = true;
  for (const NodeState& node : rep.nodes) {
    rep.finish_times[node.pos] = node.finish_step;
    rep.node_values[node.pos] = node.accumulator;
    rep.output(node.hosted.i, node.hosted.j) = node.accumulator;
    IndexPair& slot = seen(node.hosted.i, node.hosted.j);
    if (slot.i != 0 || host_of(config.kind, n, node.hosted) != node.pos) {
      rep.placement_ok = false;
    }
    slot = {node.pos.r, node.pos.c};
  }
  rep.oracle_ok = rep.output == matmul_direct(a, b);
  return result;
}

int total_steps(ArrayKind kind, int n) {
  require_dimension(n);
  return kind == ArrayKind::mesh ? 2 * n - 1 : 3 * n - 2;
}

BasicMatrix<int> finish_time_map(ArrayKind kind, int n) {
  BasicMatrix<int> out(n, 0);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) out(r, c) = mac_step(kind, n, {r, c}, n);
  return out;
}

int symmetric_readout_time(int n) {
  const BasicMatrix<int> finish = finish_time_map(ArrayKind::mesh, n);
  int latest = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const int first = finish[locate(n, {i, j})];
      const int second = finish[locate(n, {j, i})];
      latest = std::max(latest, std::min(first, second));
    }
  }
  return latest;
}

int symmetric_readout_bound(int n) {
  require_dimension(n);
  return (3 * n) / 2 + 1;
}

}  // namespace meshsim
