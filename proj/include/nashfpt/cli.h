// Copyright 2026 The nashfpt Authors.
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
#ifndef NASHFPT_CLI_H_
#define NASHFPT_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nashfpt/game.h"
#include "nashfpt/stats.h"

namespace nashfpt {

// Process exit codes.
inline constexpr int kExitFound = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

// Names accepted by RunAlgorithm and "solve --algorithm".
const std::vector<std::string>& AlgorithmNames();

struct SolveOutcome {
  std::optional<MixedProfile> profile;
  SolveStats stats;
  double wall_ms = 0;
};

// Runs one solver by name. max_support is ignored by "unbalanced", which
// always searches up to the row count. Throws std::invalid_argument for
// unknown names or instances outside the solver's hypotheses.
SolveOutcome RunAlgorithm(const std::string& algorithm,
                          const BimatrixGame& game, int max_support);

// Entry point of the nashfpt tool; args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace nashfpt

#endif  // NASHFPT_CLI_H_
