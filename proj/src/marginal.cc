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

#include "inspection/marginal.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace inspection {
namespace {

constexpr double kFeasibilityTol = 1e-9;
constexpr double kClampTol = 1e-12;
constexpr double kZeroTol = 1e-12;

}  // namespace

bool IsFeasibleMarginal(std::span<const double> rho, int r_a) {
  double total = 0.0;
  for (double x : rho) {
    if (!(x >= -kFeasibilityTol && x <= 1.0 + kFeasibilityTol)) return false;
    total += x;
  }
  return total <= r_a + kFeasibilityTol;
}

std::vector<double> MarginalsOf(const MixedAttackStrategy& sigma,
                                int num_components) {
  std::vector<double> rho(num_components, 0.0);
  for (const auto& atom : sigma.support) {
    for (int e : atom.targets) {
      if (e < 0 || e >= num_components) {
        throw ValidationError("unknown component index " + std::to_string(e));
      }
      rho[e] += atom.prob;
    }
  }
  return rho;
}

MixedAttackStrategy Decompose(std::span<const double> rho, int r_a) {
  if (r_a < 1) throw ValidationError("attacker budget must be positive");
  const int m = static_cast<int>(rho.size());
  std::vector<double> x(rho.begin(), rho.end());
  double total = 0.0;
  for (int e = 0; e < m; ++e) {
    if (!(x[e] >= -kFeasibilityTol && x[e] <= 1.0 + kFeasibilityTol)) {
      throw InfeasibleMarginalError("marginal entry " + std::to_string(e) +
                                    " outside [0,1]: " +
                                    std::to_string(x[e]));
    }
    // Entries just outside the box are rounding noise from upstream solvers.
    if (x[e] < 0.0 && x[e] >= -kClampTol) x[e] = 0.0;
    if (x[e] > 1.0 && x[e] <= 1.0 + kClampTol) x[e] = 1.0;
    x[e] = std::clamp(x[e], 0.0, 1.0);
    total += x[e];
  }
  if (total > r_a + kFeasibilityTol) {
    throw InfeasibleMarginalError("marginal mass " + std::to_string(total) +
                                  " exceeds the attacker budget " +
                                  std::to_string(r_a));
  }

  MixedAttackStrategy result;
  const int k = std::min(
      r_a, static_cast<int>(std::ceil(total - kFeasibilityTol)));
  if (k <= 0) {
    result.support.push_back({{}, 1.0});
    return result;
  }
  if (total > k) {
    for (double& v : x) v *= k / total;
    total = k;
  }
  // Dummy coordinate m soaks up the slack so the vector sums to exactly k.
  x.push_back(std::max(0.0, k - total));

  std::vector<int> order(m + 1);
  double remaining = 1.0;
  auto add_atom = [&](std::vector<int> targets, double weight) {
    for (auto& atom : result.support) {
      if (atom.targets == targets) {
        atom.prob += weight;
        return;
      }
    }
    result.support.push_back({std::move(targets), weight});
  };

  for (int step = 0; step <= m + 2 && remaining > kZeroTol; ++step) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a] > x[b]; });
    double min_in = remaining;
    for (int i = 0; i < k; ++i) min_in = std::min(min_in, x[order[i]]);
    const double max_out = k <= m ? x[order[k]] : 0.0;
    double weight = std::min(min_in, remaining - max_out);
    if (weight <= kZeroTol) weight = remaining;  // only rounding noise left

    std::vector<int> targets;
    for (int i = 0; i < k; ++i) {
      const int e = order[i];
      x[e] -= weight;
      if (e < m) targets.push_back(e);
    }
    remaining -= weight;
    std::sort(targets.begin(), targets.end());
    add_atom(std::move(targets), weight);

    for (double& v : x) {
      if (v < kZeroTol) v = 0.0;
      if (remaining - v < kZeroTol) v = std::max(remaining, 0.0);
    }
  }

  double mass = 0.0;
  for (const auto& atom : result.support) mass += atom.prob;
  for (auto& atom : result.support) atom.prob /= mass;
  return result;
}

}  // namespace inspection
