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

#ifndef INSPECTION_GAME_H_
#define INSPECTION_GAME_H_

#include <span>
#include <vector>

#include "inspection/instance.h"

namespace inspection {

// u(S, e) for every component e: the product of (1 - p_v) over the members
// of S that monitor e. Budgets are not enforced; S may be any subset of V.
std::vector<double> UndetectionByComponent(const Instance& instance,
                                           const DetectorSet& set);

// u(S, T) = sum over e in T of u(S, e). Throws ValidationError on an index
// outside the instance.
double Undetection(const Instance& instance, const DetectorSet& set,
                   std::span<const int> targets);

// U(S, rho) = sum_e rho_e u(S, e).
double SetValue(const Instance& instance, const DetectorSet& set,
                std::span<const double> rho);

// Coefficients U(sigma, e) = sum_S sigma_S u(S, e), one per component.
std::vector<double> ComponentUndetection(const Instance& instance,
                                         const MixedDefenderStrategy& sigma);

// U(sigma, rho) for a marginal attack vector rho.
double ExpectedUndetection(const Instance& instance,
                           const MixedDefenderStrategy& sigma,
                           std::span<const double> rho);

// U(sigma_D, sigma_A) evaluated directly over both supports.
double ExpectedUndetectionMixed(const Instance& instance,
                                const MixedDefenderStrategy& sigma_d,
                                const MixedAttackStrategy& sigma_a);

struct AttackResponse {
  double value = 0.0;
  std::vector<double> rho;
};

// max over rho in Theta_A of U(sigma, rho): the indicator of the r_A
// components with the largest coefficient, ties to the lowest index.
AttackResponse WorstCaseAttackValue(const Instance& instance,
                                    const MixedDefenderStrategy& sigma);

// Sum of the k largest entries of `values`; `chosen` receives their indices
// (lowest index first among ties) when non-null.
double TopKSum(std::span<const double> values, int k,
               std::vector<int>* chosen = nullptr);

}  // namespace inspection

#endif  // INSPECTION_GAME_H_
