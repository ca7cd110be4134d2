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

#include "meshsim/io.hpp"

#include <sstream>

#include "json.hpp"

namespace meshsim {

using Json = nlohmann::ordered_json;

namespace {

std::string pair_cell(int n, IndexPair p) {
  if (n <= 9) return std::to_string(p.i) + std::to_string(p.j);
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string join_lengths(const std::vector<std::size_t>& lengths, char sep) {
  std::string out;
  for (std::size_t t = 0; t < lengths.size(); ++t) {
    if (t > 0) out += sep;
    out += std::to_string(lengths[t]);
  }
  return out;
}

}  // namespace

std::string table_pretty(const Placement& table) {
  std::ostringstream os;
  for (int r = 1; r <= table.n(); ++r) {
    for (int c = 1; c <= table.n(); ++c) {
      if (c > 1) os << ' ';
      os << pair_cell(table.n(), table(r, c));
    }
    os << '\n';
  }
  return os.str();
}

std::string table_csv(const Placement& table) {
  std::ostringstream os;
  for (int r = 1; r <= table.n(); ++r) {
    for (int c = 1; c <= table.n(); ++c) {
      if (c > 1) os << ',';
      os << '"' << table(r, c).i << ',' << table(r, c).j << '"';
    }
    os << '\n';
  }
  return os.str();
}

std::string table_json(const Placement& table) {
  Json rows = Json::array();
  for (int r = 1; r <= table.n(); ++r) {
    Json row = Json::array();
    for (int c = 1; c <= table.n(); ++c) row.push_back({table(r, c).i, table(r, c).j});
    rows.push_back(std::move(row));
  }
  return dump(rows);
}

Placement table_from_json(const std::string& text) {
  const Json rows = Json::parse(text);
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("table json: expected rows");
  const int n = static_cast<int>(rows.size());
  Placement table(n);
  for (int r = 1; r <= n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r - 1)];
    if (!row.is_array() || row.size() != rows.size()) {
      throw DimensionError("table json: row " + std::to_string(r) + " is not " +
                           std::to_string(n) + " cells");
    }
    for (int c = 1; c <= n; ++c) {
      const Json& cell = row[static_cast<std::size_t>(c - 1)];
      table(r, c) = IndexPair{cell.at(0).get<int>(), cell.at(1).get<int>()};
    }
  }
  return table;
}

std::string trace_jsonl(const SimTrace& trace) {
  std::string out;
  for (const MacEvent& e : trace) {
    Json j;
    j["step"] = e.step;
    j["r"] = e.pos.r;
    j["c"] = e.pos.c;
    j["k"] = e.k;
    j["a"] = e.a;
    j["b"] = e.b;
    j["acc"] = e.acc;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string report_json(const SimReport& report) {
  Json j;
  j["kind"] = std::string(to_string(report.kind));
  j["n"] = report.finish_times.n();
  j["total_steps"] = report.total_steps;
  j["finish_times"] = std::vector<int>(report.finish_times.cells().begin(),
                                       report.finish_times.cells().end());
  j["placement_ok"] = report.placement_ok;
  j["oracle_ok"] = report.oracle_ok;
  return dump(j);
}

std::string order_table_csv(const OrderTable& table) {
  std::ostringstream os;
  os << "n,order,cycle_lengths\n";
  for (const OrderRow& row : table) {
    os << row.n << ',' << row.order << ',' << join_lengths(row.cycle_lengths, ';') << '\n';
  }
  return os.str();
}

std::string order_table_pretty(const OrderTable& table) {
  std::ostringstream os;
  for (const OrderRow& row : table) {
    os << row.n << ' ' << row.order << ' ' << join_lengths(row.cycle_lengths, ',') << '\n';
  }
  return os.str();
}

std::string order_table_json(const OrderTable& table) {
  Json rows = Json::array();
  for (const OrderRow& row : table) {
    Json j;
    j["n"] = row.n;
    j["order"] = row.order;
    j["cycle_lengths"] = row.cycle_lengths;
    rows.push_back(std::move(j));
  }
  return dump(rows);
}

std::string canonical_json(const std::string& text) {
  return dump(Json::parse(text));
}

}  // namespace meshsim
