// Copyright 2026 The Inspection Game Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INSPECTION_CLI_H_
#define INSPECTION_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "inspection/best_response.h"
#include "inspection/equilibrium.h"
#include "inspection/instance.h"

namespace inspection {

// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitNonconvergence = 2,
  kExitSizeLimit = 3,
  kExitSolverFailure = 4,
};

struct SolveOptions {
  // cg-exact, cg-fg, cg-rg, mwu-exact, mwu-fg or mwu-rg.
  std::string method = "cg-exact";
  // Defaults to 0.001 m.
  std::optional<double> epsilon;
  // Column generation iteration cap, or the MWU round count.
  std::optional<int> max_iterations;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  bool record_trace = false;
};

// Runs the named solver. Throws ValidationError for an unknown method.
EquilibriumResult RunMethod(const Instance& instance,
                            const SolveOptions& options);

// Parses argv and runs one subcommand; returns the process exit status.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace inspection

#endif  // INSPECTION_CLI_H_
