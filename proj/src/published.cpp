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

#include "meshsim/published.hpp"

namespace meshsim {

std::string placement_artifact(int n) { return "table n=" + std::to_string(n); }

std::string iterate_artifact(int k) { return "S^" + std::to_string(k) + " n=3"; }

namespace {

ReferenceData make_builtin() {
  ReferenceData ref;

  // The n=3 arrangement is the single scramble S^1 of the 3x3 labels.
  ref.placement_tables = {
      {placement_artifact(3), 3, {"11 22 33", "12 31 23", "32 13 21"}},
      {placement_artifact(4), 4, {"11 22 33 44", "12 31 24 43", "32 14 41 23", "34 42 13 21"}},
      {placement_artifact(5),
       5,
       {"11 22 33 44 55", "12 31 24 53 45", "32 14 51 25 43", "34 52 15 41 23",
        "54 35 42 13 21"}},
      {placement_artifact(6),
       6,
       {"11 22 33 44 55 66", "12 31 24 53 46 65", "32 14 51 26 63 45", "34 52 16 61 25 43",
        "54 36 62 15 41 23", "56 64 35 42 13 21"}},
      {placement_artifact(7),
       7,
       {"11 22 33 44 55 66 77", "12 31 24 53 46 75 76", "32 14 51 26 73 47 65",
        "34 52 16 71 27 63 45", "54 36 72 17 61 25 43", "56 74 37 62 15 41 23",
        "76 57 64 35 42 13 21"}},
  };

  ref.s_iterates = {
      {iterate_artifact(1), 3, {"11 22 33", "12 31 23", "32 13 21"}},
      {iterate_artifact(2), 3, {"11 32 21", "22 32 23", "13 33 12"}},
      {iterate_artifact(3), 3, {"11 32 12", "31 13 23", "33 21 22"}},
      {iterate_artifact(4), 3, {"11 13 22", "32 33 23", "21 12 31"}},
      {iterate_artifact(5), 3, {"11 33 31", "13 21 23", "12 22 32"}},
      {iterate_artifact(6), 3, {"11 21 32", "33 12 23", "22 31 13"}},
      {iterate_artifact(7), 3, {"11 12 13", "21 22 23", "31 32 33"}},
  };

  ref.cycles = {
      {3, "(11) (23) (12 22 31 32 13 33 21)"},
      {4, "(11) (42) (12 22 31 32 14 44 21) (13 33 41 34 23 24 43)"},
      {5,
       "(11) (13 33 51 54) "
       "(12 22 31 32 14 44 41 34 25 45 23 24 53 42 52 35 43 15 55 21)"},
  };

  ref.orders = {{3, 7}, {4, 7}, {5, 20}};

  ref.step_counts = {{true, 4, 7}, {false, 3, 7}};

  // Row 2 of the 7x7 table repeats "76" (also printed at (7,1)); the mirror
  // of (7,1) forces 67. The printed S^2 repeats "32" and never shows "31".
  ref.errata = {
      {placement_artifact(7), {2, 7}, "76", "67"},
      {iterate_artifact(2), {1, 2}, "32", "31"},
  };
  return ref;
}

}  // namespace

const ReferenceData& ReferenceData::builtin() {
  static const ReferenceData ref = make_builtin();
  return ref;
}

const PrintedTable* ReferenceData::placement_table(int n) const {
  for (const auto& t : placement_tables)
    if (t.n == n) return &t;
  return nullptr;
}

}  // namespace meshsim
