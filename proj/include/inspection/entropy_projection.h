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

#ifndef INSPECTION_ENTROPY_PROJECTION_H_
#define INSPECTION_ENTROPY_PROJECTION_H_

#include <span>
#include <vector>

#include "inspection/selection.h"

namespace inspection {

// Unnormalized relative entropy
//   D(rho || rho_tilde) = sum_e rho_e ln(rho_e / rho_tilde_e) + rho_tilde_e - rho_e
// with 0 ln 0 = 0. rho must be nonnegative and rho_tilde strictly positive;
// anything else raises DomainError.
double Divergence(std::span<const double> rho,
                  std::span<const double> rho_tilde);

struct Projection {
  std::vector<double> rho;
  // rho_e = min(mu * rho_tilde_e, 1).
  double mu = 1.0;
  // Number of entries clamped at one by the scaling; 0 when mu = 1.
  int k_star = 0;
  bool scaled = false;
};

// Projection of a strictly positive vector onto
// Theta_A = {rho in [0,1]^m : sum rho <= r_A} under D(. || rho_tilde).
//
// If sum_e min(rho_tilde_e, 1) <= r_A the answer is the clamp at one.
// Otherwise, with rho_tilde sorted in nonincreasing order,
//   g(k) = k + (1 / rho_tilde_(k)) sum_{j > k} rho_tilde_(j),   g(0) = 0,
// k* is the largest k <= r_A with g(k) <= r_A, and
//   mu = (r_A - k*) / sum_{j > k*} rho_tilde_(j).
// This version sorts and runs in O(m log m).
Projection ProjectSorted(std::span<const double> rho_tilde, int r_a);

// Same projection in O(m): a binary search for k* over value classes, with
// splitting values found by median-of-medians selection. The counter (if
// any) accumulates element visits of the scans and selections.
Projection ProjectLinear(std::span<const double> rho_tilde, int r_a,
                         VisitCounter* counter = nullptr);

}  // namespace inspection

#endif  // INSPECTION_ENTROPY_PROJECTION_H_
