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

#include "meshsim/verify.hpp"

#include <algorithm>
#include <exception>
#include <random>

#include "meshsim/permutation.hpp"
#include "meshsim/placement.hpp"
#include "meshsim/scrambler.hpp"
#include "meshsim/simulator.hpp"

namespace meshsim {

bool VerificationResult::passed() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const CheckSection& s) { return s.passed; });
}

namespace {

std::string cell_name(GridPosition p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.c) + ")";
}

// Adds one line for a compared table and folds its verdict into the section.
void record_table(CheckSection& section, VerificationResult& result, const std::string& artifact,
                  const ConformanceReport& rep) {
  std::string line = artifact + ": ";
  if (rep.passed()) {
    line += "ok";
    if (!rep.errata.empty()) line += " (" + std::to_string(rep.errata.size()) + " erratum)";
  } else {
    section.passed = false;
    line += "FAIL";
    for (const CellMismatch& m : rep.unexpected()) {
      line += " " + cell_name(m.pos) + " printed " + m.printed + " generated " +
              std::to_string(m.generated.i) + std::to_string(m.generated.j);
    }
  }
  section.lines.push_back(line);
  result.errata_hit.insert(result.errata_hit.end(), rep.errata.begin(), rep.errata.end());
}

CheckSection check_tables(const ReferenceData& ref, VerificationResult& result) {
  CheckSection s{"placement tables", true, {}};
  for (const PrintedTable& t : ref.placement_tables) {
    try {
      record_table(s, result, t.artifact, compare_table(t.artifact, placement_table(t.n), t.rows,
                                                        ref.errata));
    } catch (const std::exception& e) {
      s.passed = false;
      s.lines.push_back(t.artifact + ": FAIL " + e.what());
    }
  }
  return s;
}

CheckSection check_iterates(const ReferenceData& ref, VerificationResult& result) {
  CheckSection s{"scramble iterates n=3", true, {}};
  const LabelMatrix labels = standard_labels(3);
  LabelMatrix current = labels;
  for (std::size_t k = 1; k <= ref.s_iterates.size(); ++k) {
    const PrintedTable& t = ref.s_iterates[k - 1];
    current = scramble(current);
    try {
      record_table(s, result, t.artifact, compare_table(t.artifact, current, t.rows, ref.errata));
    } catch (const std::exception& e) {
      s.passed = false;
      s.lines.push_back(t.artifact + ": FAIL " + e.what());
    }
  }
  const bool back = current == labels && ref.s_iterates.size() == 7;
  if (!back) s.passed = false;
  s.lines.push_back(std::string("S^7 = standard array: ") + (back ? "ok" : "FAIL"));
  return s;
}

CheckSection check_cycles(const ReferenceData& ref) {
  CheckSection s{"cycles", true, {}};
  for (const PrintedCycles& pc : ref.cycles) {
    const CycleDecomposition d = cycle_decomposition(scramble_permutation(pc.n));
    bool ok = false;
    try {
      ok = same_cycles_up_to_rotation(d.cycles, parse_cycles(pc.n, pc.cycles));
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) s.passed = false;
    s.lines.push_back("n=" + std::to_string(pc.n) + ": " + format_cycles(pc.n, d) + " " +
                      (ok ? "ok" : "FAIL (printed " + pc.cycles + ")"));
  }
  return s;
}

CheckSection check_orders(const ReferenceData& ref) {
  CheckSection s{"orders", true, {}};
  std::string summary;
  for (const PrintedOrder& po : ref.orders) {
    const Permutation sigma = scramble_permutation(po.n);
    const std::uint64_t order = permutation_order(sigma);
    const auto iterated = order_by_iteration(sigma, 100000);
    if (order != po.order || !iterated || *iterated != order) {
      s.passed = false;
      s.lines.push_back("n=" + std::to_string(po.n) + ": FAIL computed " + std::to_string(order) +
                        " printed " + std::to_string(po.order));
    }
    if (!summary.empty()) summary += ' ';
    summary += "n=" + std::to_string(po.n) + ":" + std::to_string(order);
  }
  s.lines.insert(s.lines.begin(), summary);
  return s;
}

CheckSection check_steps(const ReferenceData& ref) {
  CheckSection s{"step counts", true, {}};
  std::mt19937_64 gen(0);
  for (const PrintedStepCount& sc : ref.step_counts) {
    const ArrayKind kind = sc.mesh ? ArrayKind::mesh : ArrayKind::standard;
    const Matrix a = random_matrix(sc.n, gen);
    const Matrix b = random_matrix(sc.n, gen);
    const SimReport rep = simulate({kind, sc.n, false}, a, b).report;
    const bool ok = rep.total_steps == sc.steps && total_steps(kind, sc.n) == sc.steps &&
                    rep.oracle_ok && rep.placement_ok;
    if (!ok) s.passed = false;
    s.lines.push_back(std::string(to_string(kind)) + " n=" + std::to_string(sc.n) + ": " +
                      std::to_string(rep.total_steps) +
                      (ok ? "" : " FAIL (printed " + std::to_string(sc.steps) + ")"));
  }
  return s;
}

}  // namespace

VerificationResult verify_published(const ReferenceData& ref) {
  VerificationResult result;
  result.sections.push_back(check_tables(ref, result));
  result.sections.push_back(check_iterates(ref, result));
  result.sections.push_back(check_cycles(ref));
  result.sections.push_back(check_orders(ref));
  result.sections.push_back(check_steps(ref));
  return result;
}

}  // namespace meshsim
