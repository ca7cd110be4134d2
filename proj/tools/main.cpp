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

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace meshsim;
using namespace meshsim::cli;

int main(int argc, char** argv) {
  CLI::App app{"Mesh and standard systolic array simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::pretty;
  std::uint64_t seed = 0;
  std::string out_path;
  const std::map<std::string, Format> formats{
      {"pretty", Format::pretty}, {"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", format, "pretty, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--seed", seed, "seed for the random operands");
  app.add_option("--out", out_path, "output path (stdout when omitted)");

  int n = 0;
  auto* table = app.add_subcommand("table", "print the mesh placement table");
  table->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);

  SimulateOptions sim;
  std::string kind = "mesh";
  auto* simulate = app.add_subcommand("simulate", "multiply seeded random matrices");
  simulate->add_option("--kind", kind, "mesh or standard")
      ->check(CLI::IsMember({"mesh", "standard"}));
  simulate->add_option("--n", sim.n, "dimension")->required()->check(CLI::PositiveNumber);
  simulate->add_flag("--trace", sim.trace, "append per-MAC events as JSON lines");
  simulate->add_flag("--symmetric", sim.symmetric, "report symmetric early readout");

  std::uint32_t k = 1;
  std::string in_path;
  auto* scramble = app.add_subcommand("scramble", "scramble a file in n x n blocks");
  scramble->add_option("--n", n, "block side")->required()->check(CLI::Range(2, 255));
  scramble->add_option("--k", k, "applications of S")->check(CLI::PositiveNumber);
  scramble->add_option("--in", in_path, "input file")->required();

  auto* descramble = app.add_subcommand("descramble", "invert scramble");
  descramble->add_option("--in", in_path, "scrambled file")->required();

  std::optional<int> single_n;
  int from = 1;
  int to = 1;
  auto* order = app.add_subcommand("order", "orders of S over a range of n");
  auto* order_n = order->add_option("--n", single_n, "single dimension");
  order->add_option("--from", from, "first dimension")->excludes(order_n);
  order->add_option("--to", to, "last dimension")->excludes(order_n);

  auto* verify = app.add_subcommand("verify-paper", "check against the published artifacts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CommandResult result;
  try {
    if (*table) {
      result = cmd_table(n, format);
    } else if (*simulate) {
      sim.kind = kind == "standard" ? ArrayKind::standard : ArrayKind::mesh;
      sim.seed = seed;
      sim.format = format;
      result = cmd_simulate(sim);
    } else if (*scramble || *descramble) {
      if (out_path.empty()) {
        std::cerr << "--out is required\n";
        return kExitUsage;
      }
      result = *scramble ? cmd_scramble(n, k, in_path, out_path)
                         : cmd_descramble(in_path, out_path);
      out_path.clear();
    } else if (*order) {
      if (single_n) from = to = *single_n;
      result = cmd_order(from, to, format);
    } else if (*verify) {
      result = cmd_verify_paper();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::cerr << result.err;
  if (out_path.empty()) {
    std::cout << result.out;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!(out << result.out)) {
      std::cerr << "cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  return result.exit_code;
}
