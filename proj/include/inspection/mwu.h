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

#ifndef INSPECTION_MWU_H_
#define INSPECTION_MWU_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "inspection/entropy_projection.h"
#include "inspection/equilibrium.h"
#include "inspection/instance.h"

namespace inspection {

struct MWUConfig {
  // Target additive error. Sets tau and eta through the schedule below unless
  // they are given explicitly.
  std::optional<double> epsilon;
  std::optional<int> tau;
  std::optional<double> eta;
  BestResponseMode mode = BestResponseMode::kForwardGreedy;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  bool record_trace = false;
};

// max{ln(m / r_A), 1}.
double EntropyRadius(int num_components, int r_a);

// ceil(4 r_A^2 max{ln(m / r_A), 1} / epsilon^2).
int ScheduledIterations(int num_components, int r_a, double epsilon);

// sqrt(max{ln(m / r_A), 1} / tau).
double ScheduledStepSize(int num_components, int r_a, int tau);

struct MWUStep {
  BestResponse response;
  Projection next;
};

// One round: a best response S to rho_t, the multiplicative update
// rho_t * exp(eta u(S, .)) and its projection back onto Theta_A. Throws
// DomainError when rho_t has a nonpositive entry.
MWUStep MwuStep(const Instance& instance, std::span<const double> rho_t,
                double eta, BestResponseMode mode,
                std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// Runs tau rounds from the uniform marginal r_A / m. The defender strategy is
// the empirical frequency of the played sets (first appearance order), the
// attacker marginal the average of the projected iterates. Throws
// ValidationError for an incomplete config or a step size above 1.
EquilibriumResult SolveMWU(const Instance& instance, const MWUConfig& config);

}  // namespace inspection

#endif  // INSPECTION_MWU_H_
