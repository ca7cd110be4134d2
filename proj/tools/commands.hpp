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

// Subcommand bodies for the meshsim tool. Each returns its stdout payload
// instead of printing, so tests can drive them directly.

#ifndef MESHSIM_TOOLS_COMMANDS_HPP
#define MESHSIM_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "meshsim/published.hpp"
#include "meshsim/simulator.hpp"

namespace meshsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

enum class Format { pretty, csv, json };

CommandResult cmd_table(int n, Format format);

struct SimulateOptions {
  ArrayKind kind = ArrayKind::mesh;
  int n = 1;
  std::uint64_t seed = 0;
  bool trace = false;
  bool symmetric = false;
  Format format = Format::pretty;
};

/// A and B are drawn from one std::mt19937_64(seed) stream, A first, with
/// entries in [-9, 9] (see random_matrix).
CommandResult cmd_simulate(const SimulateOptions& opts);

CommandResult cmd_scramble(int n, std::uint32_t k, const std::string& in_path,
                           const std::string& out_path);
CommandResult cmd_descramble(const std::string& in_path, const std::string& out_path);

CommandResult cmd_order(int n_from, int n_to, Format format);

CommandResult cmd_verify_paper(const ReferenceData& ref = ReferenceData::builtin());

}  // namespace meshsim::cli

#endif  // MESHSIM_TOOLS_COMMANDS_HPP
