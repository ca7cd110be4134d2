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

#include "commands.hpp"

#include <exception>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <vector>

#include "meshsim/io.hpp"
#include "meshsim/placement.hpp"
#include "meshsim/scrambler.hpp"
#include "meshsim/verify.hpp"

namespace meshsim::cli {

namespace {

CommandResult usage(const std::string& message) { return {kExitUsage, "", message + "\n"}; }

bool read_file(const std::string& path, std::vector<std::uint8_t>& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

bool write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(out);
}

}  // namespace

CommandResult cmd_table(int n, Format format) {
  if (n < 1) return usage("table: --n must be >= 1");
  const Placement table = placement_table(n);
  switch (format) {
    case Format::csv:
      return {kExitOk, table_csv(table), ""};
    case Format::json:
      return {kExitOk, table_json(table), ""};
    case Format::pretty:
      break;
  }
  return {kExitOk, table_pretty(table), ""};
}

CommandResult cmd_simulate(const SimulateOptions& opts) {
  if (opts.n < 1) return usage("simulate: --n must be >= 1");
  std::mt19937_64 gen(opts.seed);
  const Matrix a = random_matrix(opts.n, gen);
  const Matrix b = random_matrix(opts.n, gen);
  const SimResult sim = simulate({opts.kind, opts.n, opts.trace}, a, b);
  const SimReport& rep = sim.report;

  std::ostringstream os;
  if (opts.format == Format::json) {
    os << report_json(rep);
  } else if (opts.format == Format::csv) {
    os << "kind,n,steps,oracle,placement\n"
       << to_string(opts.kind) << ',' << opts.n << ',' << rep.total_steps << ','
       << (rep.oracle_ok ? "ok" : "fail") << ',' << (rep.placement_ok ? "ok" : "fail") << '\n';
  } else {
    os << "steps=" << rep.total_steps << " oracle=" << (rep.oracle_ok ? "ok" : "fail") << '\n';
  }
  if (opts.symmetric) {
    os << "readout=" << symmetric_readout_time(opts.n)
       << " bound=" << symmetric_readout_bound(opts.n) << '\n';
  }
  if (sim.trace) os << trace_jsonl(*sim.trace);

  const bool ok = rep.oracle_ok && rep.placement_ok &&
                  rep.total_steps == total_steps(opts.kind, opts.n);
  return {ok ? kExitOk : kExitCheckFailed, os.str(), ""};
}

CommandResult cmd_scramble(int n, std::uint32_t k, const std::string& in_path,
                           const std::string& out_path) {
  std::vector<std::uint8_t> payload;
  if (!read_file(in_path, payload)) return usage("scramble: cannot read " + in_path);
  std::vector<std::uint8_t> container;
  try {
    container = block_scramble(payload, n, k);
  } catch (const std::invalid_argument& e) {
    return usage(std::string("scramble: ") + e.what());
  }
  if (!write_file(out_path, container)) return usage("scramble: cannot write " + out_path);
  return {kExitOk,
          "scrambled " + std::to_string(payload.size()) + " bytes n=" + std::to_string(n) +
              " k=" + std::to_string(k) + "\n",
          ""};
}

CommandResult cmd_descramble(const std::string& in_path, const std::string& out_path) {
  std::vector<std::uint8_t> container;
  if (!read_file(in_path, container)) return usage("descramble: cannot read " + in_path);
  std::vector<std::uint8_t> payload;
  try {
    payload = block_descramble(container);
  } catch (const FormatError& e) {
    return usage(std::string("descramble: ") + e.what());
  }
  if (!write_file(out_path, payload)) return usage("descramble: cannot write " + out_path);
  return {kExitOk, "descrambled " + std::to_string(payload.size()) + " bytes\n", ""};
}

CommandResult cmd_order(int n_from, int n_to, Format format) {
  if (n_from < 1 || n_to > 64 || n_from > n_to) {
    return usage("order: need 1 <= from <= to <= 64");
  }
  const OrderTable table = order_table(n_from, n_to);
  switch (format) {
    case Format::csv:
      return {kExitOk, order_table_csv(table), ""};
    case Format::json:
      return {kExitOk, order_table_json(table), ""};
    case Format::pretty:
      break;
  }
  return {kExitOk, order_table_pretty(table), ""};
}

CommandResult cmd_verify_paper(const ReferenceData& ref) {
  const VerificationResult result = verify_published(ref);
  std::ostringstream os;
  for (const CheckSection& s : result.sections) {
    os << "[" << (s.passed ? "PASS" : "FAIL") << "] " << s.name << '\n';
    for (const std::string& line : s.lines) os << "  " << line << '\n';
  }
  os << "errata (" << result.errata_hit.size() << "):\n";
  for (const Erratum& e : result.errata_hit) {
    os << "  " << e.artifact << " cell (" << e.cell.r << "," << e.cell.c << "): printed "
       << e.printed << ", derived " << e.derived << '\n';
  }
  os << (result.passed() ? "verdict: ok\n" : "verdict: FAIL\n");
  return {result.passed() ? kExitOk : kExitCheckFailed, os.str(), ""};
}

}  // namespace meshsim::cli
