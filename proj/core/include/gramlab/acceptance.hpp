// Copyright 2026 The Gramlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The end-to-end verification suite: every criterion of the battery runs at
// its pinned tolerance and reports one pass/fail line. The same routines back
// the `gramlab suite acceptance` command and the ctest acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace gramlab {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceResult {
  std::vector<CriterionResult> criteria;
  std::uint64_t seed = 0;

  bool all_pass() const;
  /// One line per criterion: "[PASS] 03 gramian-identities: <detail>".
  std::string verdict_table() const;
  std::string csv_summary() const;
};

AcceptanceResult run_acceptance(std::uint64_t seed = 20260809, int threads = 0);

}  // namespace gramlab
