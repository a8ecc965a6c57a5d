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

#ifndef INSPECTION_MARGINAL_H_
#define INSPECTION_MARGINAL_H_

#include <span>
#include <vector>

#include "inspection/errors.h"
#include "inspection/instance.h"

namespace inspection {

class InfeasibleMarginalError : public InspectionError {
 public:
  explicit InfeasibleMarginalError(const std::string& message)
      : InspectionError(ErrorCode::kInfeasibleMarginal, message) {}
};

// True iff rho lies in Theta_A = {rho in [0,1]^m : sum rho <= r_A}, with
// 1e-9 slack on every constraint.
bool IsFeasibleMarginal(std::span<const double> rho, int r_a);

// rho_e = total probability of the attack sets that contain e.
std::vector<double> MarginalsOf(const MixedAttackStrategy& sigma,
                                int num_components);

// Writes rho in Theta_A as a distribution over attack sets of size at most
// r_A with at most m + 1 atoms.
//
// A dummy coordinate absorbs the slack K - sum(rho), K = ceil(sum(rho)), so
// the extended vector sums to exactly K. It is then peeled greedily: the K
// largest residuals form the next set, weighted by the largest step that
// keeps every residual within [0, remaining mass]. Each step zeroes an entry
// or makes one tight, which bounds the number of steps.
MixedAttackStrategy Decompose(std::span<const double> rho, int r_a);

}  // namespace inspection

#endif  // INSPECTION_MARGINAL_H_
