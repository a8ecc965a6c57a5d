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

#ifndef INSPECTION_BEST_RESPONSE_H_
#define INSPECTION_BEST_RESPONSE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "inspection/instance.h"

namespace inspection {

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

struct BestResponse {
  DetectorSet set;
  double value = 0.0;  // U(set, rho)
};

// Number of r-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t Binomial(int n, int r);

// True when the exhaustive oracle would stay within `cap` evaluations.
bool ExactBestResponseAffordable(const Instance& instance,
                                 std::uint64_t cap = kDefaultEnumerationCap);

// Minimizes U(S, rho) over |S| = r_D by enumeration in lexicographic order;
// the first minimizer wins. Throws SizeLimitError when C(n, r_D) > cap.
BestResponse ExactBestResponse(const Instance& instance,
                               std::span<const double> rho,
                               std::uint64_t cap = kDefaultEnumerationCap);

// Starting from the empty set, repeatedly adds the location with the largest
// marginal decrease until r_D locations are placed.
DetectorSet ForwardGreedy(const Instance& instance,
                          std::span<const double> rho);

// Starting from V, repeatedly drops the location whose removal increases
// U(., rho) the least until r_D locations remain.
DetectorSet ReverseGreedy(const Instance& instance,
                          std::span<const double> rho);

// Curvature of U(., rho) and the approximation factors it implies.
struct CurvatureReport {
  double c = 0.0;
  int d = 0;
  double bound = 0.0;          // 1 - (1 - max p)^d
  double alpha_reverse = 1.0;  // 1 / (1 - c), +inf when c = 1
  double forward_multiplier = 1.0;  // (1 - e^{-c}) / c
  double forward_additive = 0.0;    // (1 - multiplier) * r_A
};

CurvatureReport Curvature(const Instance& instance,
                          std::span<const double> rho);

// (1 - e^{-c}) / c with the c -> 0 limit of 1.
double ForwardGreedyMultiplier(double c);

// Approximation factor 1 / (1 - max p)^d of the reverse greedy oracle,
// +inf under perfect detection.
double GreedyApproximationFactor(const Instance& instance);

}  // namespace inspection

#endif  // INSPECTION_BEST_RESPONSE_H_
