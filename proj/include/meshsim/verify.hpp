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

#ifndef MESHSIM_VERIFY_HPP
#define MESHSIM_VERIFY_HPP

#include <string>
#include <vector>

#include "meshsim/published.hpp"

namespace meshsim {

struct CheckSection {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;
};

struct VerificationResult {
  std::vector<CheckSection> sections;
  std::vector<Erratum> errata_hit;

  bool passed() const;
};

/// Regenerates every published artifact (placement tables, the 3x3 scramble
/// iterates, cycle displays, orders, step counts) and diffs it against ref.
/// Mismatches registered in ref.errata are listed but do not fail.
VerificationResult verify_published(const ReferenceData& ref);

}  // namespace meshsim

#endif  // MESHSIM_VERIFY_HPP
