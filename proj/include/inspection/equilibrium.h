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

#ifndef INSPECTION_EQUILIBRIUM_H_
#define INSPECTION_EQUILIBRIUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inspection/best_response.h"
#include "inspection/instance.h"

namespace inspection {

enum class BestResponseMode { kExact, kForwardGreedy, kReverseGreedy };

const char* BestResponseModeName(BestResponseMode mode);
// Short tag used in method names: "exact", "fg" or "rg".
const char* BestResponseModeCode(BestResponseMode mode);

// Dispatches to the oracle selected by `mode`.
BestResponse ComputeBestResponse(const Instance& instance,
                                 std::span<const double> rho,
                                 BestResponseMode mode,
                                 std::uint64_t enumeration_cap);

// Guarantee of the oracle: 1 for exact pricing, 1 / (1 - max p)^d for the
// greedy oracles (+inf when some p_v = 1).
double ApproximationFactor(const Instance& instance, BestResponseMode mode);

struct Certificates {
  // max over rho in Theta_A of U(sigma_D, rho).
  double attacker_best_response = 0.0;
  // min over S of U(S, rho_A), or a lower bound on it when `defender_exact`
  // is false. Absent when no rho_A is available.
  std::optional<double> defender_best_response;
  bool defender_exact = true;
};

// One line of a solver trace: CG reports the restricted master value and the
// reduced cost of the priced column, MWU the running average payoff and the
// regret of the played sequence.
struct TraceRow {
  int iteration = 0;
  double incumbent = 0.0;
  double signal = 0.0;
};

struct EquilibriumResult {
  std::string method;
  MixedDefenderStrategy sigma_d;
  std::vector<double> rho_a;
  double value = 0.0;
  double alpha = 1.0;
  double epsilon = 0.0;
  int iterations = 0;
  int columns = 0;
  // False when a run was configured below the iteration count that carries
  // a convergence guarantee.
  bool guaranteed = true;
  Certificates certificates;
  double wall_ms = 0.0;
  std::optional<double> regret;
  std::optional<double> regret_bound;
  std::vector<TraceRow> trace;
};

// Worst-case attacker value of sigma_D, plus the defender side against rho_A
// when given: the exact best response within `cap`, otherwise the reverse
// greedy value scaled by (1 - c), which lower-bounds the optimum.
Certificates Certify(const Instance& instance,
                     const MixedDefenderStrategy& sigma_d,
                     const std::vector<double>* rho_a,
                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace inspection

#endif  // INSPECTION_EQUILIBRIUM_H_
