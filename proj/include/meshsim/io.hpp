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

#ifndef MESHSIM_IO_HPP
#define MESHSIM_IO_HPP

#include <string>

#include "meshsim/placement.hpp"
#include "meshsim/scrambler.hpp"
#include "meshsim/simulator.hpp"

namespace meshsim {

// Placement tables. Every form ends with a newline.

/// One line per row; cells "ij" for n <= 9, "(i,j)" beyond.
std::string table_pretty(const Placement& table);
/// One line per row; each cell is the quoted field "i,j".
std::string table_csv(const Placement& table);
/// Array of rows, each an array of [i, j] pairs.
std::string table_json(const Placement& table);
Placement table_from_json(const std::string& text);

/// One compact JSON object per event: step, r, c, k, a, b, acc.
std::string trace_jsonl(const SimTrace& trace);

/// total_steps, finish_times (row-major), placement_ok, oracle_ok.
std::string report_json(const SimReport& report);

/// Header "n,order,cycle_lengths"; lengths joined with ';'.
std::string order_table_csv(const OrderTable& table);
std::string order_table_pretty(const OrderTable& table);
std::string order_table_json(const OrderTable& table);

// JSON documents are written compact, one per line.

/// Parses and re-dumps in the layout used by the writers above.
std::string canonical_json(const std::string& text);

}  // namespace meshsim

#endif  // MESHSIM_IO_HPP
